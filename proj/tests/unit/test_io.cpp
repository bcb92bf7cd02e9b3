#include "doctest.h"

#include <sstream>

#include "fpcodes/io.hpp"
#include "fpcodes/verify_two_level.hpp"

using namespace fpcodes;

namespace {

std::vector<Codeword> words_of(const std::vector<std::string>& digits) {
    std::vector<Codeword> out;
    for (const auto& d : digits) out.push_back(word_from_digits(d));
    return out;
}

template <typename Reader>
auto read_str(Reader reader, const std::string& text) {
    std::istringstream in(text);
    return reader(in);
}

} // namespace

TEST_CASE("flat code round trip") {
    const Code c(Alphabet(3), 3, words_of({"012", "120", "201"}));
    std::ostringstream out;
    write_code(out, c);
    CHECK(out.str() == "3 3\n0 1 2\n1 2 0\n2 0 1\n");
    std::istringstream in(out.str());
    CHECK(read_code(in) == c);
}

TEST_CASE("grouped code round trip") {
    const TwoLevelCode c = TwoLevelCode::from_groups(
        Alphabet(3), 2, {words_of({"00", "11"}), words_of({"01", "10"})});
    std::ostringstream out;
    write_grouped_code(out, c);
    CHECK(out.str() == "3 2 2 2\n1 0 0\n1 1 1\n2 0 1\n2 1 0\n");
    std::istringstream in(out.str());
    CHECK(read_grouped_code(in) == c);
}

TEST_CASE("round trip survives a wide alphabet") {
    const Code c(Alphabet(12), 2, {{11, 0}, {0, 11}, {10, 10}});
    std::ostringstream out;
    write_code(out, c);
    std::istringstream in(out.str());
    CHECK(read_code(in) == c);
}

TEST_CASE("reader tolerates blank lines and arbitrary line breaks") {
    const Code c = read_str(read_code, "\n\n2 2\n0 0 0\n1\n\n1 0 1 1\n");
    CHECK(c.size() == 4);
}

TEST_CASE("reader rejects malformed input") {
    CHECK_THROWS_AS(read_str(read_code, ""), ParameterError);                    // empty
    CHECK_THROWS_AS(read_str(read_code, "2 2 2\n0 0\n"), ParameterError);        // 3-field header
    CHECK_THROWS_AS(read_str(read_code, "2 2\n0 x\n"), ParameterError);          // bad token
    CHECK_THROWS_AS(read_str(read_code, "2 2\n0 5\n"), DimensionError);          // symbol >= q
    CHECK_THROWS_AS(read_str(read_code, "2 2\n0 0 1\n"), ParameterError);        // truncated word
    CHECK_THROWS_AS(read_str(read_code, "2 2\n0 0\n0 0\n"), ParameterError);     // duplicate
    CHECK_THROWS_AS(read_str(read_code, "1 2\n"), ParameterError);               // q too small
    CHECK_THROWS_AS(read_str(read_code, "2 0\n"), ParameterError);               // zero length

    CHECK_THROWS_AS(read_str(read_grouped_code, "2 2\n0 0\n"), ParameterError);  // flat header
    CHECK_THROWS_AS(read_str(read_grouped_code, "2 2 2 1\n0 0 0\n3 1 1\n"),
                    ParameterError); // group index outside 1..g
    CHECK_THROWS_AS(read_str(read_grouped_code, "2 2 2 1\n1 0 0\n2 1 1\n1 0 1\n2 1 0\n"),
                    ParameterError); // count != g*p
    CHECK_THROWS_AS(read_str(read_grouped_code, "2 2 2 2\n1 0 0\n1 0 1\n1 1 0\n2 1 1\n"),
                    ParameterError); // unequal groups
    CHECK_THROWS_AS(read_str(read_grouped_code, "2 2 2 1\n1 0 0\n1 1 1\n"),
                    ParameterError); // header group count disagrees with the lines
}

TEST_CASE("read_any_code sniffs the header") {
    auto flat = read_str(read_any_code, "2 2\n0 0\n1 1\n");
    CHECK(std::holds_alternative<Code>(flat));
    auto grouped = read_str(read_any_code, "2 2 2 1\n1 0 0\n2 1 1\n");
    CHECK(std::holds_alternative<TwoLevelCode>(grouped));
    CHECK_THROWS_AS(read_str(read_any_code, "2 2 2\n"), ParameterError);
}

TEST_CASE("file variants surface open failures") {
    CHECK_THROWS_AS(read_code_file("/nonexistent/code.txt"), ParameterError);
    CHECK_THROWS_AS(write_code_file("/nonexistent/code.txt",
                                    Code(Alphabet(2), 2, words_of({"00"}))),
                    ParameterError);
}

TEST_CASE("word formatting") {
    CHECK(format_word(word_from_digits("011"), 9) == "011");
    CHECK(format_word({0, 11, 3}, 12) == "0 11 3");
    CHECK(word_from_digits("120") == Codeword{1, 2, 0});
    CHECK_THROWS_AS(word_from_digits("1a0"), ParameterError);
}

TEST_CASE("witness serialization") {
    const TwoLevelCode c = TwoLevelCode::from_groups(
        Alphabet(2), 2, {words_of({"00", "11"}), words_of({"01", "10"})});
    const Verdict v = check_fp(c, 2, 1);
    REQUIRE_FALSE(v.holds);

    const auto j = to_json(v, 2);
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["clause"] == "group");
    CHECK(j["witness"]["coalition"] == nlohmann::ordered_json::array({"00", "11"}));
    CHECK(j["witness"]["coalition_groups"] == nlohmann::ordered_json::array({1}));
    CHECK(j["witness"]["offender"] == "01");
    CHECK(j["witness"]["offender_group"] == 2);
    CHECK_FALSE(j["witness"].contains("word"));
    CHECK_FALSE(j["witness"].contains("second_coalition"));

    const std::string text = render_witness(*v.witness, 2);
    CHECK(text.find("clause: group\n") != std::string::npos);
    CHECK(text.find("coalition: {00, 11}\n") != std::string::npos);
    CHECK(text.find("coalition groups: {1}\n") != std::string::npos);
    CHECK(text.find("offender: 01\n") != std::string::npos);
    CHECK(text.find("offender group: 2\n") != std::string::npos);
}

TEST_CASE("construction report serialization") {
    ConstructionReport r;
    r.input_size = 12;
    r.groups = 4;
    r.group_size = 2;
    r.classes = {{0, 4, 2, 0}, {1, 1, 0, 1}};
    r.q1 = {0};
    r.v = 2;
    r.q2 = {0, 1};
    r.split_sets = {{0, words_of({"011", "022"})}};
    r.discarded_classes = {1};
    r.amalgams = {{{2, 3}, words_of({"206", "307"})}};
    r.unused_classes = {6, 7, 8};
    r.eliminated = 4;
    r.sources = {{word_from_digits("133"), word_from_digits("033")}};

    const auto j = to_json(r, 9);
    CHECK(j["input_size"] == 12);
    CHECK(j["classes"][0]["alpha"] == 2);
    CHECK(j["q2"] == nlohmann::ordered_json::array({0, 1}));
    CHECK(j["split_sets"][0]["members"] == nlohmann::ordered_json::array({"011", "022"}));
    CHECK(j["amalgams"][0]["sources"] == nlohmann::ordered_json::array({2, 3}));
    CHECK(j["sources"][0] == nlohmann::ordered_json::array({"133", "033"}));
    CHECK(j["eliminated"] == 4);

    const std::string text = render_report(r, 9);
    CHECK(text.find("input: 12 words\n") != std::string::npos);
    CHECK(text.find("target: 4 groups of 2\n") != std::string::npos);
    CHECK(text.find("  0: 4 = 2*2 + 0\n") != std::string::npos);
    CHECK(text.find("Q1: {0}  (q1 = 1, v = 2)\n") != std::string::npos);
    CHECK(text.find("split set 1 from class 0: {011, 022}\n") != std::string::npos);
    CHECK(text.find("amalgam 1 from classes {2, 3}: 2 words before truncation\n") !=
          std::string::npos);
    CHECK(text.find("eliminated: 4 of 12\n") != std::string::npos);
}
