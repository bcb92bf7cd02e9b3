#include "doctest.h"

#include <random>

#include "fpcodes/descendant.hpp"
#include "fpcodes/io.hpp"
#include "oracle.hpp"

using namespace fpcodes;

namespace {

std::vector<Codeword> words_of(const std::vector<std::string>& digits) {
    std::vector<Codeword> out;
    for (const auto& d : digits) out.push_back(word_from_digits(d));
    return out;
}

} // namespace

TEST_CASE("symbol profile of a parent set") {
    const auto parents = words_of({"1100", "2102", "1122"});
    const SymbolProfile prof = SymbolProfile::of(parents);
    REQUIRE(prof.length() == 4);
    CHECK(prof.coordinate(0) == std::vector<Symbol>{1, 2});
    CHECK(prof.coordinate(1) == std::vector<Symbol>{1});
    CHECK(prof.coordinate(2) == std::vector<Symbol>{0, 2});
    CHECK(prof.coordinate(3) == std::vector<Symbol>{0, 2});
    CHECK(prof.product_size() == 8);
    CHECK(prof.contains(word_from_digits("2120")));
    CHECK_FALSE(prof.contains(word_from_digits("0100")));

    CHECK_THROWS_AS(SymbolProfile::of(std::vector<Codeword>{}), ParameterError);
    CHECK_THROWS_AS(SymbolProfile::of(words_of({"110", "1100"})), DimensionError);
}

TEST_CASE("descendant set of the worked parent set") {
    const auto parents = words_of({"1100", "2102", "1122"});
    const auto expected =
        words_of({"1100", "1102", "1120", "1122", "2100", "2102", "2120", "2122"});
    CHECK(enumerate_descendants(parents) == expected);

    for (const auto& w : expected) CHECK(is_descendant(parents, w));
    CHECK_FALSE(is_descendant(parents, word_from_digits("0100")));
    CHECK_FALSE(is_descendant(parents, word_from_digits("1110")));
}

TEST_CASE("profile intersection facts") {
    // coordinate 3 separates {1100, 2102} from {1122}: profiles {0} vs {2}
    CHECK_FALSE(profiles_intersect(words_of({"1100", "2102"}), words_of({"1122"})));
    // ... but 1102 is a shared descendant of {1100, 2102} and {1102}
    CHECK(profiles_intersect(words_of({"1100", "2102"}), words_of({"1102"})));

    const auto common = SymbolProfile::of(words_of({"1100", "2102"}))
                            .first_common_word(SymbolProfile::of(words_of({"1102"})));
    REQUIRE(common.has_value());
    CHECK(*common == word_from_digits("1102"));

    CHECK(SymbolProfile::of(words_of({"1100", "2102"}))
              .intersects(SymbolProfile::of(words_of({"1102"}))));
}

TEST_CASE("product enumerator walks the product lexicographically") {
    const auto parents = words_of({"1100", "2102", "1122"});
    const ProductEnumerator walk(SymbolProfile::of(parents));
    REQUIRE(walk.count() == 8);
    const auto all = enumerate_descendants(parents);
    Codeword scratch;
    for (std::uint64_t k = 0; k < walk.count(); ++k) {
        CHECK(walk.at(k) == all[static_cast<std::size_t>(k)]);
        walk.word_at(k, scratch);
        CHECK(scratch == all[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("product ceiling raises capacity errors") {
    const auto parents = words_of({"1100", "2102", "1122"});
    CHECK_THROWS_AS(enumerate_descendants(parents, 7), CapacityError);
    try {
        enumerate_descendants(parents, 7);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("8") != std::string::npos);
    }
    CHECK_NOTHROW(enumerate_descendants(parents, 8));
}

TEST_CASE("descendants match the brute-force oracle") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 60; ++round) {
        const std::size_t q = 2 + rng() % 3;      // 2..4
        const std::size_t l = 1 + rng() % 4;      // 1..4
        const std::size_t k = 1 + rng() % 3;      // 1..3 parents
        std::vector<Codeword> parents(k, Codeword(l));
        for (auto& w : parents)
            for (auto& s : w) s = static_cast<Symbol>(rng() % q);

        const auto got = enumerate_descendants(parents);
        const auto want = oracle::desc(parents, q);
        CHECK(got == want);

        CHECK(profiles_intersect(parents, {parents[0]}));
    }
}

TEST_CASE("profiles_intersect agrees with materialized intersection") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 120; ++round) {
        const std::size_t q = 2 + rng() % 3;
        const std::size_t l = 1 + rng() % 4;
        auto draw = [&](std::size_t k) {
            std::vector<Codeword> ws(k, Codeword(l));
            for (auto& w : ws)
                for (auto& s : w) s = static_cast<Symbol>(rng() % q);
            return ws;
        };
        const auto a = draw(1 + rng() % 3);
        const auto b = draw(1 + rng() % 3);

        bool brute = false;
        for (const auto& w : oracle::desc(a, q)) brute = brute || oracle::matches(b, w);
        CHECK(profiles_intersect(a, b) == brute);
    }
}

TEST_CASE("descendant candidates cover the whole code profile") {
    const Code c(Alphabet(3), 2, words_of({"00", "12", "21"}));
    const ProductEnumerator cands = descendant_candidates(c);
    CHECK(cands.count() == 9); // {0,1,2} x {0,1,2}
    CHECK(cands.profile().coordinate(0) == std::vector<Symbol>{0, 1, 2});
}
