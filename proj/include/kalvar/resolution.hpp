#pragma once

// Graded Betti tables for Kalman varieties.
//
// The normalization Õ_{s,d,n} is resolved by pushing forward the Koszul
// complex of xi = R_s ⊗ (Q_s^* ⊕ W) from Gr(s, L). Each pair (lambda, mu)
// with mu ⊆ lambda ⊆ s × (n-s), mu ⊆ s × (d-s) contributes
//   H^j(Gr(s,L); S_lambda R_s ⊗ S_{mu^T} Q_s^*) ⊗ S_{lambda^T/mu^T} W ⊗ A(-|lambda|)
// in homological degree |lambda| - j. The modules C_s (C_1 is the coordinate
// ring of K_{1,d,n}) are assembled from these by a downward recursion on s.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kalvar/bigint.hpp"
#include "kalvar/check.hpp"
#include "kalvar/intpoly.hpp"
#include "kalvar/partitions.hpp"

namespace kalvar {

struct KalmanParams {
  int s = 1;
  int d = 1;
  int n = 2;

  /// Throws std::invalid_argument unless 1 <= s <= d < n.
  void validate() const;
  int dim_w() const { return n - d; }
  int num_vars() const { return n * n; }
};

enum class Part { I, II, III };
std::string to_string(Part p);

struct RepTerm {
  int hom_degree = 0;
  int twist = 0;
  std::vector<int> eta;  // L-factor highest weight, length d
  SkewShape w_shape;     // lambda^T / mu^T, applied to W
  Part part = Part::II;
  Partition lambda;
  Partition mu;
  int origin_s = 0;  // the s of the normalization Õ_s this term was computed in
  BigInt multiplicity;
};

enum class ModuleKind { Normalization, C, B };

struct ModuleId {
  ModuleKind kind = ModuleKind::Normalization;
  int s = 1;
  std::string to_string() const;  // "normalization(2)", "C(1)", "B(3)"
};

class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(ModuleId id, int d, int n, std::vector<RepTerm> terms);

  const ModuleId& id() const { return id_; }
  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<RepTerm>& terms() const { return terms_; }

  /// Aggregated multiplicities keyed by (hom_degree, twist).
  std::map<std::pair<int, int>, BigInt> table() const;
  BigInt at(int hom_degree, int twist) const;
  /// Total rank of F_i.
  BigInt rank(int hom_degree) const;
  /// (twist, multiplicity) pairs of F_i, twist ascending.
  std::map<int, BigInt> row(int hom_degree) const;

  /// Display tag: I/II/III, "carried" for terms inherited from a deeper C, "koszul" inside C_d.
  std::string part_label(const RepTerm& t) const;

 private:
  ModuleId id_;
  int d_ = 0;
  int n_ = 0;
  std::vector<RepTerm> terms_;
};

/// Part tag of a (lambda, mu) pair of Õ_s.
Part classify_part(int s, const Partition& lambda, const Partition& mu);

BettiTable resolution_normalization(const KalmanParams& params);

/// Re-tags every term of a normalization table; throws std::invalid_argument otherwise.
BettiTable split_parts(const BettiTable& table);

struct PartIIIProfile {
  std::vector<RepTerm> terms;
  CheckResult check;  // vanishing below hom_degree s and the closed form at hom_degree s
};

PartIIIProfile part_III_profile(const KalmanParams& params);

/// Õ_s twisted by s(s-1)/2.
BettiTable resolution_B(const KalmanParams& params);

/// Resolution of C_s for 1 <= s <= d < n.
BettiTable resolution_C(int s, int d, int n);

/// Compares a C_s table with the closed forms for hom_degree <= s.
CheckResult ses_closed_form_check(const BettiTable& c_table);

/// Checks that part I of Õ_s and part II of Õ_{s+1}(-s) agree as graded multisets.
CheckResult identification_check(const KalmanParams& params);

struct GeneratorRecord {
  int s = 0;
  Partition mu;
  Partition lambda;
  int degree = 0;
  BigInt multiplicity;
  std::vector<int> row_composition;  // a_0..a_{d-1}, a_{i-1} = lambda_i - mu_i
  bool contributes() const { return multiplicity > 0; }
};

/// Minimal generators of the ideal of K_{1,d,n}, one record per (s, mu).
std::vector<GeneratorRecord> minimal_generators(int d, int n);

/// Total predicted number of minimal generators per degree.
std::map<int, BigInt> generator_counts(const std::vector<GeneratorRecord>& records);

struct HilbertSeries {
  IntPoly numerator;
  int denom_power = 0;  // series is numerator / (1 - t)^denom_power
};

HilbertSeries hilbert_numerator(const BettiTable& table);

/// sum_{s=1}^d (-1)^{s-1} N(B_s) == N(C_1) as integer polynomials.
CheckResult les_euler_check(int d, int n);

struct PdReg {
  int pd = 0;
  int reg = 0;
};

PdReg pd_and_reg(const BettiTable& table);

/// Order of vanishing of the numerator at t = 1.
int codim_from_hilbert(const HilbertSeries& h);

}  // namespace kalvar
