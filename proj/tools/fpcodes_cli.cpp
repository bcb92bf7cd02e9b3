// fpcodes: generate, construct, verify and reproduce two-level fingerprinting codes.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "fpcodes/construct.hpp"
#include "fpcodes/descendant.hpp"
#include "fpcodes/generate.hpp"
#include "fpcodes/io.hpp"
#include "fpcodes/verify_one_level.hpp"
#include "fpcodes/verify_two_level.hpp"

namespace {

using namespace fpcodes;

unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

struct GenPolyArgs {
    std::uint32_t q = 0;
    std::size_t len = 0;
    unsigned t = 0;
    std::vector<std::uint32_t> points;
    std::string out;
};

struct GenRandomArgs {
    std::size_t q = 0;
    std::size_t len = 0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string out;
};

struct ConstructArgs {
    std::string in;
    unsigned groups = 0;
    std::string mode = "det";
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "text";
};

struct VerifyArgs {
    std::string in;
    std::string prop;
    unsigned t = 0;
    unsigned T = 0; // 0 = one-level
    unsigned jobs = default_jobs();
    std::uint64_t budget = 0; // 0 = library defaults
    std::string format = "text";
};

int run_gen_poly(const GenPolyArgs& a) {
    const Code c = gen_polynomial_fp_code(PrimeField(a.q), a.len, a.t, a.points);
    write_code_file(a.out, c);
    std::cout << "wrote " << c.size() << " words (q=" << c.alphabet().size()
              << ", length=" << c.length() << ") to " << a.out << "\n";
    return 0;
}

int run_gen_random(const GenRandomArgs& a) {
    const Code c = gen_random_code(a.q, a.len, a.n, a.seed);
    write_code_file(a.out, c);
    std::cout << "wrote " << c.size() << " words (q=" << c.alphabet().size()
              << ", length=" << c.length() << ") to " << a.out << "\n";
    return 0;
}

int run_construct(const ConstructArgs& a) {
    const Code input = read_code_file(a.in);
    ConstructOptions opts;
    opts.mode = a.mode == "random" ? PickMode::seeded : PickMode::deterministic;
    opts.seed = a.seed;

    Construction built = [&] {
        try {
            return construct_two_level(input, a.groups, opts);
        } catch (const InfeasibleError& e) {
            std::cerr << "error: " << e.what() << "\npartial report:\n"
                      << render_report(e.partial(), input.alphabet().size());
            std::exit(2);
        }
    }();
    write_grouped_code_file(a.out, built.code);

    const std::size_t q = input.alphabet().size();
    const std::string report_path = a.out + (a.format == "json" ? ".report.json" : ".report.txt");
    std::ofstream report(report_path);
    if (!report) throw ParameterError("cannot open '" + report_path + "' for writing");
    if (a.format == "json")
        report << to_json(built.report, q).dump(2) << "\n";
    else
        report << render_report(built.report, q);

    std::cout << "wrote " << built.code.group_count() << " groups of " << built.code.group_size()
              << " to " << a.out << " (eliminated " << built.report.eliminated << " of "
              << built.report.input_size << ")\nreport: " << report_path << "\n";
    return 0;
}

int run_verify(const VerifyArgs& a) {
    const auto prop = property_from_name(a.prop);
    if (!prop) throw ParameterError("unknown property '" + a.prop + "'");

    VerifyOptions opts;
    if (a.budget != 0) opts.budget = Budget::with_work(a.budget);
    opts.jobs = a.jobs;

    auto loaded = read_any_code_file(a.in);
    const bool grouped = std::holds_alternative<TwoLevelCode>(loaded);
    if (a.T != 0 && !grouped)
        throw ParameterError("--T needs a grouped code file; '" + a.in + "' is one-level");

    Verdict verdict;
    std::size_t q = 0;
    if (a.T != 0) {
        const auto& c = std::get<TwoLevelCode>(loaded);
        q = c.base().alphabet().size();
        verdict = check_property(*prop, c, a.T, a.t, opts);
    } else if (grouped) {
        const auto& c = std::get<TwoLevelCode>(loaded);
        q = c.base().alphabet().size();
        verdict = check_property(*prop, c.base(), a.t, opts);
    } else {
        const auto& c = std::get<Code>(loaded);
        q = c.alphabet().size();
        verdict = check_property(*prop, c, a.t, opts);
    }

    if (a.format == "json") {
        nlohmann::ordered_json j;
        j["property"] = a.prop;
        if (a.T != 0) j["T"] = a.T;
        j["t"] = a.t;
        const auto v = to_json(verdict, q);
        for (const auto& [key, value] : v.items()) j[key] = value;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "property: " << a.prop << "\n";
        if (a.T != 0) std::cout << "T: " << a.T << "\n";
        std::cout << "t: " << a.t << "\n";
        std::cout << "holds: " << (verdict.holds ? "yes" : "no") << "\n";
        if (verdict.witness) std::cout << render_witness(*verdict.witness, q);
    }
    return verdict.holds ? 0 : 1;
}

// --- embedded fixtures ---

std::vector<Codeword> words_from(const std::vector<std::string>& digits) {
    std::vector<Codeword> words;
    words.reserve(digits.size());
    for (const auto& d : digits) words.push_back(word_from_digits(d));
    return words;
}

std::string set_to_string(const std::vector<Codeword>& words, std::size_t q = 10) {
    std::string s = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) s += ", ";
        s += format_word(words[i], q);
    }
    return s + "}";
}

Code example3_code() {
    return Code(Alphabet(9), 3,
                words_from({"011", "022", "033", "044", "105", "206", "307", "408", "550", "660",
                            "770", "880"}));
}

TwoLevelCode example3_fixture() {
    const std::vector<std::vector<Codeword>> groups = {
        words_from({"011", "022"}),
        words_from({"833", "844"}),
        words_from({"105", "550"}),
        words_from({"206", "660"}),
    };
    return TwoLevelCode::from_groups(Alphabet(9), 3, groups);
}

Code example2_code() {
    const std::vector<std::size_t> sizes = {4, 5, 10, 11, 17, 5, 2, 4, 18, 10, 5};
    std::vector<Codeword> words;
    for (std::size_t a = 0; a < sizes.size(); ++a)
        for (std::size_t i = 0; i < sizes[a]; ++i)
            words.push_back({static_cast<Symbol>(a), static_cast<Symbol>(i / 11),
                             static_cast<Symbol>(i % 11)});
    return Code(Alphabet(11), 3, std::move(words));
}

int fail_diff(const std::string& name, const std::string& field, const std::string& expected,
              const std::string& got) {
    std::cout << name << ": MISMATCH\n  field: " << field << "\n  expected: " << expected
              << "\n  got: " << got << "\n";
    return 1;
}

int run_repro_desc_example() {
    const std::vector<Codeword> parents = words_from({"1100", "2102", "1122"});
    const std::vector<Codeword> expected = words_from(
        {"1100", "1102", "1120", "1122", "2100", "2102", "2120", "2122"});
    const auto got = enumerate_descendants(parents);
    std::cout << "desc({1100, 2102, 1122}):\n";
    for (const auto& w : got) std::cout << "  " << format_word(w, 3) << "\n";
    if (got != expected)
        return fail_diff("desc-example", "descendant set", std::to_string(expected.size()) +
                         " words", std::to_string(got.size()) + " words or wrong content");
    std::cout << "desc-example: OK (" << got.size() << " descendants)\n";
    return 0;
}

int run_repro_example2() {
    const Code input = example2_code();
    const Construction built = construct_two_level(input, 9, {});
    const ConstructionReport& r = built.report;
    std::cout << render_report(r, 11);

    auto want = [&](const std::string& field, std::uint64_t expected, std::uint64_t got) {
        return expected == got
                   ? 0
                   : fail_diff("example2", field, std::to_string(expected), std::to_string(got));
    };
    if (int rc = want("p", 6, r.group_size)) return rc;
    if (int rc = want("v", 8, r.v)) return rc;
    if (int rc = want("q1 size", 5, r.q1.size())) return rc;
    if (int rc = want("discarded classes", 3, r.discarded_classes.size())) return rc;
    if (int rc = want("amalgamated sets", 1, r.amalgams.size())) return rc;
    if (int rc = want("amalgam pre-truncation size", 10, r.amalgams[0].members.size())) return rc;
    if (int rc = want("groups", 9, built.code.group_count())) return rc;
    if (int rc = want("group size", 6, built.code.group_size())) return rc;
    if (int rc = want("eliminated", 37, r.eliminated)) return rc;
    std::cout << "example2: OK (9 groups of 6, eliminated 37)\n";
    return 0;
}

int run_repro_example3() {
    const Code c = example3_code();
    const Verdict one_level = check_ta(c, 2);
    std::cout << "base code 2-TA: " << (one_level.holds ? "holds" : "FAILS") << "\n";
    if (!one_level.holds)
        return fail_diff("example3", "one-level 2-TA", "holds", "fails");

    const TwoLevelCode fixture = example3_fixture();
    const Verdict two_level = check_ta(fixture, 3, 2);
    std::cout << "fixture (3,2)-TA: " << (two_level.holds ? "holds" : "fails, witness:") << "\n";
    if (two_level.holds)
        return fail_diff("example3", "(3,2)-TA verdict", "fails", "holds");
    const Witness& w = *two_level.witness;
    std::cout << render_witness(w, 9);

    if (w.clause != Clause::group)
        return fail_diff("example3", "clause", "group", "base");
    const auto expected_coalition = words_from({"011", "105", "550"});
    if (w.coalition != expected_coalition)
        return fail_diff("example3", "coalition", "{011, 105, 550}", set_to_string(w.coalition));
    if (!w.word || *w.word != word_from_digits("000"))
        return fail_diff("example3", "word", "000",
                         w.word ? format_word(*w.word, 9) : "(none)");
    if (!w.offender || *w.offender != word_from_digits("206"))
        return fail_diff("example3", "offender", "206",
                         w.offender ? format_word(*w.offender, 9) : "(none)");
    if (!w.offender_group || *w.offender_group != 4)
        return fail_diff("example3", "offender group", "4",
                         w.offender_group ? std::to_string(*w.offender_group) : "(none)");
    if (w.coalition_groups != std::vector<unsigned>{1, 3})
        return fail_diff("example3", "coalition groups", "{1, 3}", "(differs)");
    std::cout << "example3: OK (witness matches)\n";
    return 0;
}

int run_repro(const std::string& which) {
    if (which == "desc-example") return run_repro_desc_example();
    if (which == "example2") return run_repro_example2();
    return run_repro_example3();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-level fingerprinting code toolkit"};
    app.require_subcommand(1);

    GenPolyArgs poly;
    GenRandomArgs rnd;
    ConstructArgs cons;
    VerifyArgs ver;
    std::string repro_which;

    auto* generate = app.add_subcommand("generate", "write a code file");
    generate->require_subcommand(1);
    auto* gen_poly = generate->add_subcommand("poly", "polynomial evaluation code over a prime field");
    gen_poly->add_option("--q", poly.q, "prime field size")->required();
    gen_poly->add_option("--len", poly.len, "code length")->required();
    gen_poly->add_option("--t", poly.t, "frameproof strength")->required();
    gen_poly->add_option("--points", poly.points, "evaluation points (default 0..len-1)")
        ->delimiter(',');
    gen_poly->add_option("--out", poly.out, "output code file")->required();

    auto* gen_rand = generate->add_subcommand("random", "seeded uniform distinct words");
    gen_rand->add_option("--q", rnd.q, "alphabet size")->required();
    gen_rand->add_option("--len", rnd.len, "code length")->required();
    gen_rand->add_option("--n", rnd.n, "number of words")->required();
    gen_rand->add_option("--seed", rnd.seed, "RNG seed");
    gen_rand->add_option("--out", rnd.out, "output code file")->required();

    auto* construct = app.add_subcommand("construct", "two-level code via split/amalgamate/replace");
    construct->add_option("--in", cons.in, "input code file")->required();
    construct->add_option("--groups", cons.groups, "group count g")->required();
    construct->add_option("--mode", cons.mode, "pick mode")
        ->check(CLI::IsMember({"det", "random"}));
    construct->add_option("--seed", cons.seed, "seed for --mode random");
    construct->add_option("--out", cons.out, "output grouped code file")->required();
    construct->add_option("--format", cons.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "exhaustive property check");
    verify->add_option("--in", ver.in, "code or grouped code file")->required();
    verify->add_option("--prop", ver.prop, "property")
        ->check(CLI::IsMember({"fp", "sfp", "ipp", "ta"}))
        ->required();
    verify->add_option("--t", ver.t, "coalition bound t")->required();
    verify->add_option("--T", ver.T, "group coalition bound (two-level check)");
    verify->add_option("--jobs", ver.jobs, "worker threads");
    verify->add_option("--budget", ver.budget, "enumeration budget override");
    verify->add_option("--format", ver.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* repro = app.add_subcommand("repro", "regenerate a worked example and diff it");
    repro->add_option("which", repro_which, "desc-example | example2 | example3")
        ->check(CLI::IsMember({"desc-example", "example2", "example3"}))
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_poly->parsed()) return run_gen_poly(poly);
        if (gen_rand->parsed()) return run_gen_random(rnd);
        if (construct->parsed()) return run_construct(cons);
        if (verify->parsed()) return run_verify(ver);
        if (repro->parsed()) return run_repro(repro_which);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
