#include "fpcodes/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace fpcodes {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
    if (!is_prime(modulus))
        throw ParameterError("field modulus " + std::to_string(modulus) + " is not prime");
}

std::uint32_t PrimeField::add(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
}

std::uint32_t PrimeField::sub(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b % p_) % p_);
}

std::uint32_t PrimeField::mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t base = a % p_, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw ParameterError("zero has no multiplicative inverse");
    return pow(a, p_ - 2);
}

Code gen_polynomial_fp_code(const PrimeField& field, std::size_t length, unsigned t,
                            std::vector<std::uint32_t> points) {
    const std::uint64_t q = field.modulus();
    if (t == 0) throw ParameterError("coalition bound t must be at least 1");
    if (length < 3) throw ParameterError("length must be at least 3");
    if (length > q)
        throw ParameterError("length " + std::to_string(length) + " exceeds field size " +
                             std::to_string(q) + "; evaluation points cannot be distinct");
    if (points.empty()) {
        points.resize(length);
        for (std::size_t i = 0; i < length; ++i) points[i] = static_cast<std::uint32_t>(i);
    }
    if (points.size() != length)
        throw ParameterError("expected " + std::to_string(length) + " evaluation points, got " +
                             std::to_string(points.size()));
    for (std::uint32_t pt : points)
        if (pt >= q) throw ParameterError("evaluation point " + std::to_string(pt) +
                                          " is outside the field");
    {
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParameterError("evaluation points must be distinct");
    }

    const std::size_t degree_bound = (length + t - 1) / t; // ⌈length / t⌉ coefficients
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < degree_bound; ++i) {
        if (count > (std::uint64_t{1} << 24) / q)
            throw CapacityError("polynomial code size q^" + std::to_string(degree_bound) +
                                " is too large to enumerate");
        count *= q;
    }

    std::vector<Codeword> words;
    words.reserve(static_cast<std::size_t>(count));
    std::vector<std::uint32_t> coeff(degree_bound);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t j = 0; j < degree_bound; ++j) { // constant term varies fastest
            coeff[j] = static_cast<std::uint32_t>(rest % q);
            rest /= q;
        }
        Codeword w(length);
        for (std::size_t i = 0; i < length; ++i) {
            std::uint32_t val = 0;
            for (std::size_t j = degree_bound; j-- > 0;) // Horner
                val = field.add(field.mul(val, points[i]), coeff[j]);
            w[i] = static_cast<Symbol>(val);
        }
        words.push_back(std::move(w));
    }
    return Code(Alphabet(static_cast<std::size_t>(q)), length, std::move(words));
}

TwoLevelCode partition_by_first_coordinate(const Code& c) {
    if (c.empty()) throw ParameterError("cannot partition an empty code");
    std::vector<std::vector<Codeword>> classes(c.alphabet().size());
    for (const auto& w : c.words()) classes[w[0]].push_back(w);
    std::vector<std::vector<Codeword>> groups;
    for (auto& cls : classes)
        if (!cls.empty()) groups.push_back(std::move(cls));
    for (const auto& grp : groups)
        if (grp.size() != groups.front().size())
            throw ParameterError("first-symbol classes have unequal sizes (" +
                                 std::to_string(groups.front().size()) + " vs " +
                                 std::to_string(grp.size()) +
                                 "); use construct_two_level to equalize them");
    return TwoLevelCode::from_groups(c.alphabet(), c.length(), groups);
}

Code gen_random_code(std::size_t q, std::size_t length, std::size_t n, std::uint64_t seed) {
    if (q < 2 || q > kMaxAlphabetSize) throw ParameterError("alphabet size out of range");
    if (length == 0) throw ParameterError("length must be positive");
    std::uint64_t capacity = 1;
    bool saturated = false;
    for (std::size_t i = 0; i < length && !saturated; ++i) {
        if (capacity > UINT64_MAX / q) saturated = true;
        else capacity *= q;
    }
    if (!saturated && n > capacity)
        throw ParameterError("cannot draw " + std::to_string(n) + " distinct words from a space of " +
                             std::to_string(capacity));

    std::mt19937_64 rng(seed);
    std::set<Codeword> drawn;
    Codeword w(length);
    while (drawn.size() < n) {
        for (std::size_t i = 0; i < length; ++i) w[i] = static_cast<Symbol>(rng() % q);
        drawn.insert(w);
    }
    return Code(Alphabet(q), length, std::vector<Codeword>(drawn.begin(), drawn.end()));
}

} // namespace fpcodes
