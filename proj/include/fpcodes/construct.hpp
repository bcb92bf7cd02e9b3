#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fpcodes/code.hpp"
#include "fpcodes/descendant.hpp"

namespace fpcodes {

enum class PickMode { deterministic, seeded };

struct ConstructOptions {
    PickMode mode = PickMode::deterministic;
    std::uint64_t seed = 0; // used only in seeded mode
};

// One first-symbol class G_a = {x ∈ C : x_1 = a} with g_a = alpha·p + beta.
struct ClassStat {
    Symbol symbol = 0;
    std::size_t size = 0;  // g_a
    std::size_t alpha = 0; // g_a / p
    std::size_t beta = 0;  // g_a % p
};

// A set of p words split off one class; members keep their original first symbol.
struct SplitSet {
    Symbol source = 0;
    std::vector<Codeword> members; // sorted
};

// Whole classes merged until the set reaches size ≥ p (pre-truncation size ≤ 2p-2).
struct AmalgamSet {
    std::vector<Symbol> sources; // merge order
    std::vector<Codeword> members;
};

struct ConstructionReport {
    std::size_t input_size = 0;
    unsigned groups = 0;     // g
    std::size_t group_size = 0; // p
    std::vector<ClassStat> classes; // non-empty classes, ascending symbol
    std::vector<Symbol> q1; // {a : alpha_a > 0}
    std::size_t v = 0;      // Σ alpha_a = number of split sets available
    std::vector<Symbol> q2; // replacement symbols, ascending; |q2| = min(v, g)
    std::vector<SplitSet> split_sets;      // construction order
    std::vector<Symbol> discarded_classes; // q2 \ q1, their words eliminated wholesale
    std::vector<AmalgamSet> amalgams;      // pre-truncation
    std::vector<Symbol> unused_classes;    // leftover classes never merged
    std::size_t eliminated = 0;            // |C| - g·p
    // final word -> source word in C, sorted by final word; phi as pairs
    std::vector<std::pair<Codeword, Codeword>> sources;
};

// First-coordinate relabel pi sending the constructed code's symbols back to
// the input code's symbols; identity on symbols the output never uses first.
class SymbolRemap {
public:
    explicit SymbolRemap(std::vector<Symbol> pi);
    static SymbolRemap identity(std::size_t alphabet_size);

    Symbol pi(Symbol a) const;
    std::size_t alphabet_size() const { return pi_.size(); }
    const std::vector<Symbol>& table() const { return pi_; }

private:
    std::vector<Symbol> pi_;
};

// pi applied to coordinate 1 only; other coordinates unchanged.
Codeword apply_psi(const SymbolRemap& remap, const Codeword& x);

class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, ConstructionReport partial);
    const ConstructionReport& partial() const { return partial_; }

private:
    ConstructionReport partial_;
};

struct Construction {
    TwoLevelCode code;
    SymbolRemap remap;
    ConstructionReport report;
};

// Splits, amalgamates and relabels C into g groups of p = ⌈|C| / 2g⌉ words
// each, eliminating at most half of C. Deterministic by default; the seeded
// mode randomizes every pick the algorithm leaves free. Requires 2 ≤ g ≤ q.
Construction construct_two_level(const Code& c, unsigned g, const ConstructOptions& opts = {});

// psi(desc(X)) ⊆ desc(psi(X)). True for every X by construction of psi; a
// false return is a diagnostic failure, not a property of the input.
bool check_lemma_containment(const SymbolRemap& remap, const std::vector<Codeword>& parents,
                             std::uint64_t ceiling = kDefaultProductCeiling);

} // namespace fpcodes
