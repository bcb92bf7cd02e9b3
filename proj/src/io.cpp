#include "fpcodes/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace fpcodes {

namespace {

std::uint64_t parse_uint(const std::string& tok, const char* what) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char ch) {
            return std::isdigit(ch) != 0;
        }))
        throw ParameterError(std::string("invalid ") + what + " '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        throw ParameterError(std::string(what) + " '" + tok + "' is out of range");
    }
}

std::vector<std::string> split_line(const std::string& line) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    return toks;
}

std::vector<std::string> read_header(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        auto toks = split_line(line);
        if (!toks.empty()) return toks;
    }
    throw ParameterError("missing header line");
}

std::vector<std::uint64_t> read_numbers(std::istream& in, const char* what) {
    std::vector<std::uint64_t> values;
    std::string tok;
    while (in >> tok) values.push_back(parse_uint(tok, what));
    return values;
}

Symbol to_symbol(std::uint64_t value, std::size_t q) {
    if (value >= q)
        throw DimensionError("symbol " + std::to_string(value) + " outside alphabet of size " +
                             std::to_string(q));
    return static_cast<Symbol>(value);
}

Code build_code(const std::vector<std::string>& header, std::istream& in) {
    const std::uint64_t q = parse_uint(header[0], "alphabet size");
    const std::uint64_t l = parse_uint(header[1], "code length");
    if (q < 2 || q > kMaxAlphabetSize) throw ParameterError("alphabet size out of range");
    if (l == 0) throw ParameterError("code length must be positive");

    const auto nums = read_numbers(in, "symbol");
    if (nums.size() % l != 0)
        throw ParameterError("file holds " + std::to_string(nums.size()) +
                             " symbols, not a multiple of the length " + std::to_string(l));
    std::vector<Codeword> words(nums.size() / l);
    for (std::size_t i = 0; i < words.size(); ++i) {
        words[i].resize(static_cast<std::size_t>(l));
        for (std::size_t j = 0; j < l; ++j)
            words[i][j] = to_symbol(nums[i * l + j], static_cast<std::size_t>(q));
    }
    return Code(Alphabet(static_cast<std::size_t>(q)), static_cast<std::size_t>(l),
                std::move(words));
}

TwoLevelCode build_grouped(const std::vector<std::string>& header, std::istream& in) {
    const std::uint64_t q = parse_uint(header[0], "alphabet size");
    const std::uint64_t l = parse_uint(header[1], "code length");
    const std::uint64_t g = parse_uint(header[2], "group count");
    const std::uint64_t p = parse_uint(header[3], "group size");
    if (q < 2 || q > kMaxAlphabetSize) throw ParameterError("alphabet size out of range");
    if (l == 0) throw ParameterError("code length must be positive");

    const auto nums = read_numbers(in, "symbol");
    const std::uint64_t stride = l + 1;
    if (nums.size() % stride != 0)
        throw ParameterError("grouped line must hold a group index plus " + std::to_string(l) +
                             " symbols");
    const std::size_t n = nums.size() / stride;
    if (n != g * p)
        throw ParameterError("grouped file declares " + std::to_string(g) + "x" +
                             std::to_string(p) + " words but holds " + std::to_string(n));

    std::vector<Codeword> words(n);
    std::vector<unsigned> file_groups(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t gi = nums[i * stride];
        if (gi == 0 || gi > g)
            throw ParameterError("group index " + std::to_string(gi) + " outside 1.." +
                                 std::to_string(g));
        file_groups[i] = static_cast<unsigned>(gi);
        words[i].resize(static_cast<std::size_t>(l));
        for (std::size_t j = 0; j < l; ++j)
            words[i][j] = to_symbol(nums[i * stride + 1 + j], static_cast<std::size_t>(q));
    }

    Code base(Alphabet(static_cast<std::size_t>(q)), static_cast<std::size_t>(l), words);
    std::vector<unsigned> assignments(base.size());
    for (std::size_t i = 0; i < n; ++i) assignments[*base.index_of(words[i])] = file_groups[i];
    TwoLevelCode code(std::move(base), std::move(assignments));
    if (code.group_count() != g || code.group_size() != p)
        throw ParameterError("grouped file header disagrees with its own group structure");
    return code;
}

} // namespace

Code read_code(std::istream& in) {
    const auto header = read_header(in);
    if (header.size() != 2) throw ParameterError("code file header must be 'q length'");
    return build_code(header, in);
}

TwoLevelCode read_grouped_code(std::istream& in) {
    const auto header = read_header(in);
    if (header.size() != 4)
        throw ParameterError("grouped file header must be 'q length groups group_size'");
    return build_grouped(header, in);
}

std::variant<Code, TwoLevelCode> read_any_code(std::istream& in) {
    const auto header = read_header(in);
    if (header.size() == 2) return build_code(header, in);
    if (header.size() == 4) return build_grouped(header, in);
    throw ParameterError("header has " + std::to_string(header.size()) +
                         " fields; expected 2 (code) or 4 (grouped code)");
}

void write_code(std::ostream& out, const Code& c) {
    out << c.alphabet().size() << ' ' << c.length() << '\n';
    for (const auto& w : c.words()) {
        for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
        out << '\n';
    }
}

void write_grouped_code(std::ostream& out, const TwoLevelCode& c) {
    out << c.base().alphabet().size() << ' ' << c.base().length() << ' ' << c.group_count() << ' '
        << c.group_size() << '\n';
    for (unsigned g = 1; g <= c.group_count(); ++g) {
        for (const auto& w : c.group_members(g)) {
            out << g;
            for (Symbol s : w) out << ' ' << s;
            out << '\n';
        }
    }
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open '" + path + "' for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open '" + path + "' for writing");
    return out;
}

} // namespace

Code read_code_file(const std::string& path) {
    auto in = open_in(path);
    return read_code(in);
}

void write_code_file(const std::string& path, const Code& c) {
    auto out = open_out(path);
    write_code(out, c);
    if (!out) throw ParameterError("failed writing '" + path + "'");
}

TwoLevelCode read_grouped_code_file(const std::string& path) {
    auto in = open_in(path);
    return read_grouped_code(in);
}

void write_grouped_code_file(const std::string& path, const TwoLevelCode& c) {
    auto out = open_out(path);
    write_grouped_code(out, c);
    if (!out) throw ParameterError("failed writing '" + path + "'");
}

std::variant<Code, TwoLevelCode> read_any_code_file(const std::string& path) {
    auto in = open_in(path);
    return read_any_code(in);
}

std::string format_word(const Codeword& w, std::size_t q) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (q > 10 && i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

Codeword word_from_digits(std::string_view digits) {
    Codeword w;
    w.reserve(digits.size());
    for (char ch : digits) {
        if (ch < '0' || ch > '9')
            throw ParameterError(std::string("invalid digit '") + ch + "' in word literal");
        w.push_back(static_cast<Symbol>(ch - '0'));
    }
    return w;
}

namespace {

nlohmann::ordered_json words_json(const std::vector<Codeword>& words, std::size_t q) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& w : words) arr.push_back(format_word(w, q));
    return arr;
}

std::string set_str(const std::vector<Codeword>& words, std::size_t q) {
    std::string s = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) s += ", ";
        s += format_word(words[i], q);
    }
    return s + "}";
}

std::string group_set_str(const std::vector<unsigned>& groups) {
    std::string s = "{";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(groups[i]);
    }
    return s + "}";
}

std::string symbol_set_str(const std::vector<Symbol>& symbols) {
    std::string s = "{";
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(symbols[i]);
    }
    return s + "}";
}

} // namespace

nlohmann::ordered_json to_json(const Witness& w, std::size_t q) {
    nlohmann::ordered_json j;
    j["clause"] = w.clause == Clause::base ? "base" : "group";
    if (!w.coalition.empty()) j["coalition"] = words_json(w.coalition, q);
    if (!w.coalition_groups.empty()) j["coalition_groups"] = w.coalition_groups;
    if (!w.second_coalition.empty()) j["second_coalition"] = words_json(w.second_coalition, q);
    if (!w.second_coalition_groups.empty())
        j["second_coalition_groups"] = w.second_coalition_groups;
    if (!w.parent_sets.empty()) {
        nlohmann::ordered_json sets = nlohmann::ordered_json::array();
        for (const auto& set : w.parent_sets) sets.push_back(words_json(set, q));
        j["parent_sets"] = sets;
    }
    if (w.word) j["word"] = format_word(*w.word, q);
    if (w.offender) j["offender"] = format_word(*w.offender, q);
    if (w.offender_group) j["offender_group"] = *w.offender_group;
    return j;
}

nlohmann::ordered_json to_json(const Verdict& v, std::size_t q) {
    nlohmann::ordered_json j;
    j["holds"] = v.holds;
    if (v.witness) j["witness"] = to_json(*v.witness, q);
    return j;
}

nlohmann::ordered_json to_json(const ConstructionReport& r, std::size_t q) {
    nlohmann::ordered_json j;
    j["input_size"] = r.input_size;
    j["groups"] = r.groups;
    j["group_size"] = r.group_size;
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& st : r.classes) {
        nlohmann::ordered_json c;
        c["symbol"] = st.symbol;
        c["size"] = st.size;
        c["alpha"] = st.alpha;
        c["beta"] = st.beta;
        classes.push_back(c);
    }
    j["classes"] = classes;
    j["q1"] = r.q1;
    j["v"] = r.v;
    j["q2"] = r.q2;
    nlohmann::ordered_json splits = nlohmann::ordered_json::array();
    for (const auto& s : r.split_sets) {
        nlohmann::ordered_json e;
        e["source"] = s.source;
        e["members"] = words_json(s.members, q);
        splits.push_back(e);
    }
    j["split_sets"] = splits;
    j["discarded_classes"] = r.discarded_classes;
    nlohmann::ordered_json amalgams = nlohmann::ordered_json::array();
    for (const auto& a : r.amalgams) {
        nlohmann::ordered_json e;
        e["sources"] = a.sources;
        e["members"] = words_json(a.members, q);
        amalgams.push_back(e);
    }
    j["amalgams"] = amalgams;
    j["unused_classes"] = r.unused_classes;
    j["eliminated"] = r.eliminated;
    nlohmann::ordered_json sources = nlohmann::ordered_json::array();
    for (const auto& [fin, src] : r.sources)
        sources.push_back({format_word(fin, q), format_word(src, q)});
    j["sources"] = sources;
    return j;
}

std::string render_witness(const Witness& w, std::size_t q) {
    std::string s;
    s += "clause: ";
    s += (w.clause == Clause::base ? "base" : "group");
    s += '\n';
    if (!w.coalition.empty()) s += "coalition: " + set_str(w.coalition, q) + "\n";
    if (!w.coalition_groups.empty())
        s += "coalition groups: " + group_set_str(w.coalition_groups) + "\n";
    if (!w.second_coalition.empty())
        s += "second coalition: " + set_str(w.second_coalition, q) + "\n";
    if (!w.second_coalition_groups.empty())
        s += "second coalition groups: " + group_set_str(w.second_coalition_groups) + "\n";
    if (!w.parent_sets.empty()) {
        s += "parent sets:\n";
        for (const auto& set : w.parent_sets) s += "  " + set_str(set, q) + "\n";
    }
    if (w.word) s += "word: " + format_word(*w.word, q) + "\n";
    if (w.offender) s += "offender: " + format_word(*w.offender, q) + "\n";
    if (w.offender_group) s += "offender group: " + std::to_string(*w.offender_group) + "\n";
    return s;
}

std::string render_report(const ConstructionReport& r, std::size_t q) {
    std::string s;
    s += "input: " + std::to_string(r.input_size) + " words\n";
    s += "target: " + std::to_string(r.groups) + " groups of " + std::to_string(r.group_size) +
         "\n";
    s += "classes (symbol: size = alpha*p + beta):\n";
    for (const auto& st : r.classes)
        s += "  " + std::to_string(st.symbol) + ": " + std::to_string(st.size) + " = " +
             std::to_string(st.alpha) + "*" + std::to_string(r.group_size) + " + " +
             std::to_string(st.beta) + "\n";
    s += "Q1: " + symbol_set_str(r.q1) + "  (q1 = " + std::to_string(r.q1.size()) +
         ", v = " + std::to_string(r.v) + ")\n";
    s += "Q2: " + symbol_set_str(r.q2) + "\n";
    s += "discarded classes: " + symbol_set_str(r.discarded_classes) + "\n";
    for (std::size_t i = 0; i < r.split_sets.size(); ++i)
        s += "split set " + std::to_string(i + 1) + " from class " +
             std::to_string(r.split_sets[i].source) + ": " +
             set_str(r.split_sets[i].members, q) + "\n";
    for (std::size_t i = 0; i < r.amalgams.size(); ++i)
        s += "amalgam " + std::to_string(i + 1) + " from classes " +
             symbol_set_str(r.amalgams[i].sources) + ": " +
             std::to_string(r.amalgams[i].members.size()) + " words before truncation\n";
    s += "unused classes: " + symbol_set_str(r.unused_classes) + "\n";
    s += "eliminated: " + std::to_string(r.eliminated) + " of " + std::to_string(r.input_size) +
         "\n";
    return s;
}

} // namespace fpcodes
