#pragma once

// Borel-Weil-Bott on the Grassmannian Gr(s, L), dim L = d.
//
// A weight nu of length d lists the Q-block (length d - s) followed by the
// R-block (length s). The dotted action w . nu = w(nu + rho) - rho with
// rho = (d-1, ..., 1, 0) either has a fixed point (all cohomology vanishes)
// or sorts nu + rho strictly; then the only cohomology sits in degree l(w),
// the number of inversions of nu + rho, and equals S_eta L with
// eta = sort_desc(nu + rho) - rho.

#include <optional>
#include <vector>

#include "kalvar/bigint.hpp"
#include "kalvar/partitions.hpp"

namespace kalvar {

struct WeightVector {
  std::vector<int> entries;
  int length() const { return static_cast<int>(entries.size()); }
};

/// Non-vanishing Bott outcome: H^degree = S_eta L.
struct Cohomology {
  int degree = 0;
  std::vector<int> eta;
  bool operator==(const Cohomology&) const = default;
};

/// std::nullopt means all cohomology vanishes.
using BottOutcome = std::optional<Cohomology>;

struct DottedActionTrace {
  std::vector<int> rho;
  std::vector<int> shifted;
  std::vector<int> sorted_shifted;
  int inversions = 0;
};

struct BottResult {
  BottOutcome outcome;
  DottedActionTrace trace;
};

BottResult dotted_bott(const WeightVector& nu);

/// S_lambda R_s ⊗ S_{mu^T} Q_s^* on Gr(s, L). `mu_t` is mu^T itself.
struct BundleTerm {
  Partition lambda;
  Partition mu_t;
  int s = 0;
  int d = 0;
};

/// (0^{d-s-m}, -mu^T_m, ..., -mu^T_1, lambda_1, ..., lambda_s) with m = l(mu^T).
/// Throws std::invalid_argument if l(lambda) > s or l(mu^T) > d - s.
WeightVector bundle_weight(const BundleTerm& term);

struct BundleCohomology {
  BottOutcome outcome;
  BigInt multiplicity;  // dim S_eta L, zero when vanishing
};

BundleCohomology bundle_cohomology(const BundleTerm& term);

}  // namespace kalvar
