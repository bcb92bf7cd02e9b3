#include "doctest.h"

#include "fpcodes/code.hpp"
#include "fpcodes/io.hpp"

using namespace fpcodes;

namespace {

Code tiny(std::size_t q, std::size_t l, const std::vector<std::string>& digits) {
    std::vector<Codeword> words;
    for (const auto& d : digits) words.push_back(word_from_digits(d));
    return Code(Alphabet(q), l, std::move(words));
}

} // namespace

TEST_CASE("alphabet bounds") {
    CHECK_NOTHROW(Alphabet(2));
    CHECK_NOTHROW(Alphabet(65536));
    CHECK_THROWS_AS(Alphabet(0), ParameterError);
    CHECK_THROWS_AS(Alphabet(1), ParameterError);
    CHECK_THROWS_AS(Alphabet(65537), CapacityError);
    CHECK(Alphabet(4).contains(3));
    CHECK_FALSE(Alphabet(4).contains(4));
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance({0, 1, 2}, {0, 1, 2}) == 0);
    CHECK(hamming_distance({0, 1, 2}, {0, 2, 1}) == 2);
    CHECK(hamming_distance({1, 1}, {2, 2}) == 2);
    CHECK_THROWS_AS(hamming_distance({0, 1}, {0, 1, 2}), DimensionError);
}

TEST_CASE("code stores sorted distinct words") {
    const Code c = tiny(3, 2, {"21", "02", "10"});
    CHECK(c.size() == 3);
    CHECK(c.word(0) == word_from_digits("02"));
    CHECK(c.word(1) == word_from_digits("10"));
    CHECK(c.word(2) == word_from_digits("21"));
    CHECK(c.contains(word_from_digits("10")));
    CHECK_FALSE(c.contains(word_from_digits("11")));
    CHECK(c.index_of(word_from_digits("21")) == 2);
    CHECK_FALSE(c.index_of(word_from_digits("00")).has_value());
}

TEST_CASE("code rejects malformed input") {
    CHECK_THROWS_AS(tiny(3, 2, {"10", "10"}), ParameterError);  // duplicate
    CHECK_THROWS_AS(tiny(3, 2, {"102"}), DimensionError);       // wrong length
    CHECK_THROWS_AS(tiny(3, 2, {"13"}), DimensionError);        // symbol out of range
    CHECK_THROWS_AS(Code(Alphabet(3), 0, {}), ParameterError);  // zero length
    CHECK_NOTHROW(Code(Alphabet(3), 2, {}));                    // empty code is fine
}

TEST_CASE("min distance reports every minimizer") {
    // 1102 differs from each of 1100, 1122, 2102 in exactly one coordinate
    const Code c = tiny(3, 4, {"1100", "2102", "1122"});
    const MinDistance r = min_distance_to_code(c, word_from_digits("1102"));
    CHECK(r.distance == 1);
    REQUIRE(r.minimizers.size() == 3);
    CHECK(r.minimizers[0] == word_from_digits("1100"));
    CHECK(r.minimizers[1] == word_from_digits("1122"));
    CHECK(r.minimizers[2] == word_from_digits("2102"));

    const MinDistance exact = min_distance_to_code(c, word_from_digits("2102"));
    CHECK(exact.distance == 0);
    CHECK(exact.minimizers == std::vector<Codeword>{word_from_digits("2102")});

    CHECK_THROWS_AS(min_distance_to_code(Code(Alphabet(3), 4, {}), word_from_digits("0000")),
                    ParameterError);
}

TEST_CASE("min distance ties across the whole code") {
    const Code c = tiny(9, 3,
                        {"011", "022", "033", "044", "105", "206", "307", "408", "550", "660",
                         "770", "880"});
    const MinDistance r = min_distance_to_code(c, word_from_digits("000"));
    CHECK(r.distance == 2);
    CHECK(r.minimizers.size() == 12); // every word is distance 2 from 000
}

TEST_CASE("two-level code bookkeeping") {
    const Code base = tiny(3, 2, {"00", "01", "10", "11"});
    const TwoLevelCode c(base, {1, 2, 2, 1});
    CHECK(c.group_count() == 2);
    CHECK(c.group_size() == 2);
    CHECK(c.group_of(std::size_t{0}) == 1);
    CHECK(c.group_of(word_from_digits("10")) == 2);
    CHECK(c.group_members(1) == std::vector<Codeword>{word_from_digits("00"),
                                                      word_from_digits("11")});
    CHECK(c.group_set({word_from_digits("11"), word_from_digits("00")}) ==
          std::vector<unsigned>{1});
    CHECK(c.group_set({word_from_digits("01"), word_from_digits("00")}) ==
          std::vector<unsigned>{1, 2});
    CHECK_THROWS_AS(c.group_of(word_from_digits("22")), ParameterError);
}

TEST_CASE("two-level code validation") {
    const Code base = tiny(3, 2, {"00", "01", "10"});
    CHECK_THROWS_AS(TwoLevelCode(base, {1, 2}), DimensionError);      // misaligned
    CHECK_THROWS_AS(TwoLevelCode(base, {0, 1, 2}), ParameterError);   // 0-based index
    CHECK_THROWS_AS(TwoLevelCode(base, {1, 1, 2}), ParameterError);   // unequal sizes
    CHECK_THROWS_AS(TwoLevelCode(Code(Alphabet(3), 2, {}), {}), ParameterError);
}

TEST_CASE("from_groups flattens and realigns") {
    const std::vector<std::vector<Codeword>> groups = {
        {word_from_digits("11"), word_from_digits("00")},
        {word_from_digits("01"), word_from_digits("10")},
    };
    const TwoLevelCode c = TwoLevelCode::from_groups(Alphabet(2), 2, groups);
    CHECK(c.group_count() == 2);
    // base is sorted; assignments follow the words, not the input order
    CHECK(c.base().word(0) == word_from_digits("00"));
    CHECK(c.group_of(word_from_digits("00")) == 1);
    CHECK(c.group_of(word_from_digits("01")) == 2);
    CHECK(c.group_of(word_from_digits("11")) == 1);
}
