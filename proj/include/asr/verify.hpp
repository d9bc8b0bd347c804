#pragma once

#include <string>
#include <vector>

#include "asr/monomial.hpp"

namespace asr {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The named verification checks behind `asrtool verify` and the acceptance
// suite. All corpora are generated from fixed seeds, so every run is
// reproducible.

CheckResult verify_example1();                        // golden asr set
CheckResult verify_t1_depth_pattern();                // alternating symbolic depths
CheckResult verify_oracle_equivalence();              // polyhedral vs box scan
CheckResult verify_ass_equals_prime_members();        // ass(I) = one-prime asr members
CheckResult verify_localization_identity();           // deletion/localization identity
CheckResult verify_symbolic_multiplicative_inclusion();  // asr(I^{(s)}) in asr(I^{(st)})
CheckResult verify_balanced_monotonicity();           // cover-ideal chains + witness lifts
CheckResult verify_symbolic_stability();              // stability window at the s0 bound
CheckResult verify_polyhedral_exactness();            // exact vertices, determinant bound
CheckResult verify_depth_engine_sanity();             // Koszul depths, homology anchors

/// All checks, in acceptance order.
std::vector<CheckResult> run_all_checks();

/// The golden example ideal (three primary pieces intersected).
MonomialIdeal example1_ideal();

}  // namespace asr
