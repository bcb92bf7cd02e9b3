#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fpcodes/errors.hpp"

namespace fpcodes {

using Symbol = std::uint16_t;
using Codeword = std::vector<Symbol>;

inline constexpr std::size_t kMaxAlphabetSize = std::size_t{1} << 16;

// Symbol alphabet {0, ..., q-1}.
class Alphabet {
public:
    explicit Alphabet(std::size_t size);

    std::size_t size() const { return size_; }
    bool contains(Symbol s) const { return s < size_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::size_t size_;
};

// Number of coordinates where x and y differ; lengths must agree.
std::size_t hamming_distance(const Codeword& x, const Codeword& y);

// A set of distinct equal-length words over a common alphabet, kept in
// lexicographic order so that enumeration and witnesses are deterministic.
class Code {
public:
    Code(Alphabet alphabet, std::size_t length, std::vector<Codeword> words);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t length() const { return length_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    const std::vector<Codeword>& words() const { return words_; }
    const Codeword& word(std::size_t i) const { return words_[i]; }

    bool contains(const Codeword& w) const;
    std::optional<std::size_t> index_of(const Codeword& w) const;

    friend bool operator==(const Code&, const Code&) = default;

private:
    Alphabet alphabet_;
    std::size_t length_;
    std::vector<Codeword> words_; // sorted, distinct
};

struct MinDistance {
    std::size_t distance = 0;
    std::vector<Codeword> minimizers; // every codeword attaining the minimum, in code order
};

// d_H(C, y) together with the complete minimizer set.
MinDistance min_distance_to_code(const Code& c, const Codeword& y);

// A code partitioned into g groups of exactly p words each. Group indices are
// 1-based; assignments align with base().words().
class TwoLevelCode {
public:
    TwoLevelCode(Code base, std::vector<unsigned> assignments);

    // Builds the base from explicit groups (each of the same size).
    static TwoLevelCode from_groups(Alphabet alphabet, std::size_t length,
                                    const std::vector<std::vector<Codeword>>& groups);

    const Code& base() const { return base_; }
    unsigned group_count() const { return group_count_; } // g
    std::size_t group_size() const { return group_size_; } // p

    unsigned group_of(std::size_t word_index) const { return assignments_[word_index]; }
    unsigned group_of(const Codeword& w) const; // ParameterError if w is not in the base
    const std::vector<unsigned>& assignments() const { return assignments_; }

    std::vector<Codeword> group_members(unsigned group) const;

    // Sorted deduplicated group-index set of the given words.
    std::vector<unsigned> group_set(const std::vector<Codeword>& words) const;

    friend bool operator==(const TwoLevelCode&, const TwoLevelCode&) = default;

private:
    Code base_;
    std::vector<unsigned> assignments_;
    unsigned group_count_ = 0;
    std::size_t group_size_ = 0;
};

} // namespace fpcodes
