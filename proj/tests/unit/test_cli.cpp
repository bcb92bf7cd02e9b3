#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#ifndef FPCODES_CLI_PATH
#error "FPCODES_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(FPCODES_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("fpcodes_cli_test_" + std::to_string(getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::string kTwelveWords =
    "9 3\n0 1 1\n0 2 2\n0 3 3\n0 4 4\n1 0 5\n2 0 6\n3 0 7\n4 0 8\n5 5 0\n6 6 0\n7 7 0\n8 8 0\n";

} // namespace

TEST_CASE("cli repro subcommands succeed") {
    for (const char* which : {"desc-example", "example2", "example3"}) {
        const RunResult r = run_cli(std::string("repro ") + which);
        CAPTURE(which);
        CAPTURE(r.output);
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("OK") != std::string::npos);
        CHECK(r.output.find("MISMATCH") == std::string::npos);
    }
}

TEST_CASE("cli generates and verifies a polynomial code") {
    TempDir tmp;
    const std::string code = tmp.file("poly.txt");
    const RunResult gen = run_cli("generate poly --q 5 --len 4 --t 2 --out " + code);
    CAPTURE(gen.output);
    REQUIRE(gen.exit_code == 0);
    CHECK(gen.output.find("wrote 25 words") != std::string::npos);

    const RunResult ver = run_cli("verify --in " + code + " --prop fp --t 2");
    CAPTURE(ver.output);
    CHECK(ver.exit_code == 0);
    CHECK(ver.output.find("holds: yes") != std::string::npos);
}

TEST_CASE("cli reports generation errors") {
    TempDir tmp;
    const RunResult r =
        run_cli("generate poly --q 5 --len 6 --t 2 --out " + tmp.file("bad.txt"));
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error:") != std::string::npos);
}

TEST_CASE("cli verify exits 1 on a failing property and prints the witness") {
    TempDir tmp;
    const std::string code = tmp.file("square.txt");
    write_file(code, "2 2\n0 0\n0 1\n1 0\n1 1\n");

    const RunResult r = run_cli("verify --in " + code + " --prop ta --t 2");
    CAPTURE(r.output);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("holds: no") != std::string::npos);
    CHECK(r.output.find("coalition: {00, 11}") != std::string::npos);
    CHECK(r.output.find("offender: 01") != std::string::npos);
}

TEST_CASE("cli construct writes the grouped code plus a report") {
    TempDir tmp;
    const std::string input = tmp.file("twelve.txt");
    const std::string grouped = tmp.file("grouped.txt");
    write_file(input, kTwelveWords);

    const RunResult r = run_cli("construct --in " + input + " --groups 4 --out " + grouped);
    CAPTURE(r.output);
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("wrote 4 groups of 2") != std::string::npos);
    CHECK(r.output.find("eliminated 4 of 12") != std::string::npos);
    REQUIRE(fs::exists(grouped));
    REQUIRE(fs::exists(grouped + ".report.txt"));
    const std::string report = slurp(grouped + ".report.txt");
    CHECK(report.find("eliminated: 4 of 12") != std::string::npos);
    CHECK(report.find("split set 1 from class 0") != std::string::npos);

    // the constructed grouping stays frameproof at the group level
    const RunResult ver =
        run_cli("verify --in " + grouped + " --prop fp --t 2 --T 3");
    CAPTURE(ver.output);
    CHECK(ver.exit_code == 0);
    CHECK(ver.output.find("T: 3") != std::string::npos);
    CHECK(ver.output.find("holds: yes") != std::string::npos);

    // without --T the base code of a grouped file is checked
    const RunResult base = run_cli("verify --in " + grouped + " --prop fp --t 2");
    CHECK(base.exit_code == 0);

    SUBCASE("json report") {
        const std::string jgrouped = tmp.file("grouped2.txt");
        const RunResult jr = run_cli("construct --in " + input + " --groups 4 --out " + jgrouped +
                                     " --format json");
        REQUIRE(jr.exit_code == 0);
        const auto parsed = nlohmann::json::parse(slurp(jgrouped + ".report.json"));
        CHECK(parsed["input_size"] == 12);
        CHECK(parsed["eliminated"] == 4);
        CHECK(parsed["group_size"] == 2);
    }
}

TEST_CASE("cli construct surfaces infeasible inputs with a partial report") {
    TempDir tmp;
    const std::string input = tmp.file("tiny.txt");
    write_file(input, "4 2\n0 1\n");
    const RunResult r =
        run_cli("construct --in " + input + " --groups 2 --out " + tmp.file("out.txt"));
    CAPTURE(r.output);
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error:") != std::string::npos);
    CHECK(r.output.find("partial report:") != std::string::npos);
    CHECK(r.output.find("input: 1 words") != std::string::npos);
}

TEST_CASE("cli rejects --T on a one-level code file") {
    TempDir tmp;
    const std::string code = tmp.file("flat.txt");
    write_file(code, "2 2\n0 0\n1 1\n");
    const RunResult r = run_cli("verify --in " + code + " --prop fp --t 1 --T 2");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("one-level") != std::string::npos);
}

TEST_CASE("cli json verify output parses") {
    TempDir tmp;
    const std::string code = tmp.file("square.txt");
    write_file(code, "2 2\n0 0\n0 1\n1 0\n1 1\n");
    const RunResult r = run_cli("verify --in " + code + " --prop fp --t 2 --format json");
    CHECK(r.exit_code == 1);
    const auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["property"] == "fp");
    CHECK(parsed["t"] == 2);
    CHECK(parsed["holds"] == false);
    CHECK(parsed["witness"]["offender"] == "01");
}

TEST_CASE("cli enforces the enumeration budget override") {
    TempDir tmp;
    const std::string code = tmp.file("square.txt");
    write_file(code, "2 2\n0 0\n0 1\n1 0\n1 1\n");
    const RunResult r = run_cli("verify --in " + code + " --prop fp --t 2 --budget 3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("exceeds budget limit") != std::string::npos);
}

TEST_CASE("cli misc failure modes") {
    CHECK(run_cli("verify --in /nonexistent.txt --prop fp --t 1").exit_code == 2);
    CHECK(run_cli("verify --in x.txt --prop fp --t 1 --bogus-flag").exit_code == 2);
    CHECK(run_cli("repro nope").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("generate --help").exit_code == 0);
}

TEST_CASE("cli seeded generation is reproducible") {
    TempDir tmp;
    const std::string a = tmp.file("a.txt");
    const std::string b = tmp.file("b.txt");
    REQUIRE(run_cli("generate random --q 5 --len 3 --n 10 --seed 7 --out " + a).exit_code == 0);
    REQUIRE(run_cli("generate random --q 5 --len 3 --n 10 --seed 7 --out " + b).exit_code == 0);
    CHECK(slurp(a) == slurp(b));

    // a seeded construct run is reproducible too
    const std::string input = tmp.file("twelve.txt");
    write_file(input, kTwelveWords);
    const std::string g1 = tmp.file("g1.txt");
    const std::string g2 = tmp.file("g2.txt");
    REQUIRE(run_cli("construct --in " + input + " --groups 4 --mode random --seed 11 --out " +
                    g1).exit_code == 0);
    REQUIRE(run_cli("construct --in " + input + " --groups 4 --mode random --seed 11 --out " +
                    g2).exit_code == 0);
    CHECK(slurp(g1) == slurp(g2));
}
