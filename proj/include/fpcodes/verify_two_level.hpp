#pragma once

#include "fpcodes/code.hpp"
#include "fpcodes/verdict.hpp"
#include "fpcodes/verify_one_level.hpp"

namespace fpcodes {

// Two-level checks: clause (a) is the plain t-level property on the base code
// and runs first (its failure subsumes the verdict); clause (b) repeats the
// scan at coalition size ≤ T against group indices instead of codewords.
// Requires 1 ≤ t ≤ T.
Verdict check_fp(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts = {});
Verdict check_sfp(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts = {});
Verdict check_ipp(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts = {});
Verdict check_ta(const TwoLevelCode& c, unsigned T, unsigned t, const VerifyOptions& opts = {});

Verdict check_property(Property p, const TwoLevelCode& c, unsigned T, unsigned t,
                       const VerifyOptions& opts = {});

} // namespace fpcodes
