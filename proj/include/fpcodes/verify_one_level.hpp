#pragma once

#include "fpcodes/budget.hpp"
#include "fpcodes/code.hpp"
#include "fpcodes/verdict.hpp"

namespace fpcodes {

struct VerifyOptions {
    Budget budget{};
    unsigned jobs = 1; // worker threads for the outer enumeration; results are order-independent
};

// Exhaustive property checks over all coalitions of size ≤ t. Enumeration is
// deterministic (subsets ascending by size then lexicographic, descendants
// lexicographic, codewords in code order) and the first violation wins, so a
// failing Verdict's witness is reproducible.
Verdict check_fp(const Code& c, unsigned t, const VerifyOptions& opts = {});
Verdict check_sfp(const Code& c, unsigned t, const VerifyOptions& opts = {});
Verdict check_ipp(const Code& c, unsigned t, const VerifyOptions& opts = {});
Verdict check_ta(const Code& c, unsigned t, const VerifyOptions& opts = {});

Verdict check_property(Property p, const Code& c, unsigned t, const VerifyOptions& opts = {});

} // namespace fpcodes
