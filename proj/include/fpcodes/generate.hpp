#pragma once

#include <cstdint>
#include <vector>

#include "fpcodes/code.hpp"

namespace fpcodes {

// Arithmetic mod a prime; primality is checked at construction.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t modulus);

    std::uint32_t modulus() const { return p_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const; // ParameterError on 0

private:
    std::uint32_t p_;
};

// Evaluation code {(f(a_1), ..., f(a_l)) : deg f < ⌈l/t⌉} over the field;
// |C| = q^⌈l/t⌉ and any two words agree on at most ⌈l/t⌉ - 1 coordinates,
// which makes the code t-frameproof. Points default to 0..l-1; they must be
// distinct, so l ≤ q. Requires l ≥ 3.
Code gen_polynomial_fp_code(const PrimeField& field, std::size_t length, unsigned t,
                            std::vector<std::uint32_t> points = {});

// Groups words by their first coordinate. All classes must have equal size;
// otherwise a ParameterError points the caller at construct_two_level.
TwoLevelCode partition_by_first_coordinate(const Code& c);

// n distinct uniformly drawn words; identical output for identical seeds.
Code gen_random_code(std::size_t q, std::size_t length, std::size_t n, std::uint64_t seed);

} // namespace fpcodes
