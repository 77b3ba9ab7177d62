#pragma once

// Aggregate consistency checks behind the `check-*` commands.

#include <vector>

#include "kalvar/check.hpp"
#include "kalvar/resolution.hpp"
#include "kalvar/verify.hpp"

namespace kalvar {

/// For every weight of length 1..max_d with entries in [lo, hi], compares dotted_bott
/// against a search over all permutations of nu + rho.
CheckResult check_bott(int max_d, int lo, int hi);

/// Part III vanishes below hom_degree s and matches the closed form at hom_degree s.
CheckResult check_part_iii(const KalmanParams& params);

/// F_0 = ⊕_{mu ⊆ s×(d-s)} A(-|mu|), split into l(mu) = s (I) and l(mu) < s (II).
CheckResult check_f0_counts(const KalmanParams& params);

/// C_1's F_1 equals the closed-form minimal generators, degree by degree.
CheckResult check_generators_match(int d, int n);

/// pd(C_1) = d(n-d) - d + 1 and reg(C_1) = d(d+1)/2 - 1.
CheckResult check_pd_reg(int d, int n);

/// codim(Õ_s) = s(n-d); for s = 1 also codim(C_1) = n-d.
CheckResult check_codim(const KalmanParams& params);

/// trace-minor identity for all 1 <= i <= d.
std::vector<CheckResult> check_trace(int d);

/// Every d×d minor vanishes at `trials` random Kalman points, and x_11 does not.
CheckResult check_minors(int d, int n, int trials, const PrimeFieldConfig& cfg);

/// Euler characteristic of the long exact sequence, the part I / part II identification
/// and the C_s closed forms for every s.
std::vector<CheckResult> check_les(int d, int n);

}  // namespace kalvar
