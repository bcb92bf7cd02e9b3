#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fpcodes/code.hpp"

namespace fpcodes {

enum class Property { fp, sfp, ipp, ta };

std::string_view property_name(Property p);
std::optional<Property> property_from_name(std::string_view name);

// Which half of a two-level check failed: the base-code clause (plain t-level
// property) or the group-level clause.
enum class Clause { base, group };

// Structured counterexample. Only the fields relevant to the failed property
// are populated:
//   FP : coalition X, offender z ∈ (desc(X) ∩ C) \ X
//   SFP: coalition X0, second_coalition X1 (disjoint), word = shared descendant
//   IPP: word = x, parent_sets = chain of parent sets with empty overall intersection
//   TA : coalition X, word = x ∈ desc(X), offender = minimizer z ∉ X
// Group-clause witnesses add coalition_groups = G(X) and offender_group = G(z).
struct Witness {
    Clause clause = Clause::base;
    std::vector<Codeword> coalition;
    std::vector<Codeword> second_coalition;
    std::vector<std::vector<Codeword>> parent_sets;
    std::optional<Codeword> word;
    std::optional<Codeword> offender;
    std::vector<unsigned> coalition_groups;
    std::vector<unsigned> second_coalition_groups;
    std::optional<unsigned> offender_group;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }

    static Verdict pass() { return {}; }
    static Verdict fail(Witness w) { return {false, std::move(w)}; }
};

} // namespace fpcodes
