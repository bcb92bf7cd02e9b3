#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpcodes/code.hpp"

namespace fpcodes {

inline constexpr std::uint64_t kDefaultProductCeiling = std::uint64_t{1} << 24;

// Per-coordinate symbol sets S_i(X) of a non-empty word set X.
// desc(X) is exactly the Cartesian product of these sets.
class SymbolProfile {
public:
    static SymbolProfile of(const std::vector<Codeword>& words);
    static SymbolProfile of(const Code& code);

    std::size_t length() const { return sets_.size(); }
    const std::vector<Symbol>& coordinate(std::size_t i) const { return sets_[i]; }

    // Product of the per-coordinate set sizes, saturating at UINT64_MAX.
    std::uint64_t product_size() const;

    bool contains(const Codeword& w) const;
    bool intersects(const SymbolProfile& other) const;

    // Lexicographically least word in the intersection of the two products,
    // if every coordinate overlaps.
    std::optional<Codeword> first_common_word(const SymbolProfile& other) const;

private:
    std::vector<std::vector<Symbol>> sets_; // each sorted ascending
};

// true iff word matches some parent in every coordinate.
bool is_descendant(const std::vector<Codeword>& parents, const Codeword& word);

// The full descendant set in lexicographic order. CapacityError (naming the
// product size) when the profile product exceeds the ceiling.
std::vector<Codeword> enumerate_descendants(const std::vector<Codeword>& parents,
                                            std::uint64_t ceiling = kDefaultProductCeiling);

// Emptiness test for desc(first) ∩ desc(second) without materializing either.
bool profiles_intersect(const std::vector<Codeword>& first, const std::vector<Codeword>& second);

// Random-access lexicographic walk over the product of a profile's coordinate
// sets; index ranges can be split across workers.
class ProductEnumerator {
public:
    explicit ProductEnumerator(SymbolProfile profile,
                               std::uint64_t ceiling = kDefaultProductCeiling);

    std::uint64_t count() const { return count_; }
    const SymbolProfile& profile() const { return profile_; }

    Codeword at(std::uint64_t k) const;
    void word_at(std::uint64_t k, Codeword& out) const; // reuses out's storage

private:
    SymbolProfile profile_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t count_ = 1;
};

// Candidate superset of desc_t(C): the product of CS's per-coordinate symbol
// sets. Callers filter candidates by parent-set search.
ProductEnumerator descendant_candidates(const Code& c,
                                        std::uint64_t ceiling = kDefaultProductCeiling);

} // namespace fpcodes
