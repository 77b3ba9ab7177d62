#pragma once

// Independent verification over a prime field: random points of K_{1,d,n},
// graded ideal dimensions of the minor ideal, generator-minimality counts and
// truncated Hilbert functions.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "kalvar/bigint.hpp"
#include "kalvar/field.hpp"
#include "kalvar/macaulay.hpp"
#include "kalvar/poly.hpp"

namespace kalvar {

struct PrimeFieldConfig {
  std::uint32_t modulus = 32003;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument unless the modulus is prime and exceeds 2d(n-d).
  void validate(int d, int n) const;
  PrimeField field() const { return PrimeField{modulus}; }
};

/// Seed of an independent stream derived from (seed, stream) by SplitMix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// phi has an eigenvector supported on the first d coordinates.
struct KalmanPoint {
  int n = 0;
  std::vector<Zp> phi;     // n × n, row-major; phi[i*n + j] is the value of x_ij
  std::vector<Zp> eigvec;  // length n, zero beyond d
  Zp eigval;

  bool satisfies_eigen_equation() const;
};

/// Deterministic in (cfg.seed, stream).
KalmanPoint random_kalman_point(int d, int n, const PrimeFieldConfig& cfg, std::uint64_t stream = 0);

struct VanishingFailure {
  int trial = 0;
  std::size_t generator = 0;
  std::uint32_t value = 0;
};

struct VanishingReport {
  int trials = 0;
  std::size_t generators = 0;
  std::uint32_t modulus = 0;
  std::uint64_t seed = 0;
  std::vector<VanishingFailure> failures;
  bool passed() const { return failures.empty(); }
};

VanishingReport vanishing_test(std::span<const SparsePoly<Zp>> generators, int d, int n, int trials, const PrimeFieldConfig& cfg);

/// Rank of the degree-e Macaulay matrix of the generators of degree <= e.
std::uint64_t graded_ideal_dimension(std::span<const SparsePoly<Zp>> generators, int e, const PrimeFieldConfig& cfg,
                                     const MacaulayOptions& options = {});

/// All d×d minors of the reduced Kalman matrix over Z/pZ.
std::vector<SparsePoly<Zp>> kalman_minors(int d, int n, const PrimeFieldConfig& cfg);

struct DegreeCount {
  int e = 0;
  std::uint64_t ideal_dim = 0;
  std::uint64_t lower_dim = 0;  // degree-e piece of the ideal of generators of degree < e
  std::int64_t new_gens = 0;
  BigInt predicted;
  bool matches() const { return BigInt(static_cast<long>(new_gens)) == predicted; }
};

struct MinimalityReport {
  int d = 0;
  int n = 0;
  int max_degree = 0;
  std::uint32_t modulus = 0;
  std::uint64_t seed = 0;
  std::vector<DegreeCount> per_degree;
  bool passed() const;
};

/// New minimal generators per degree 1..max_degree of the ideal spanned by `generators`,
/// compared with `predicted` (missing degrees predict 0).
MinimalityReport minimality_counts(std::span<const SparsePoly<Zp>> generators, int max_degree,
                                   const std::map<int, BigInt>& predicted, const PrimeFieldConfig& cfg,
                                   const MacaulayOptions& options = {});

/// minimality_counts on all maximal minors against the closed-form generator counts.
/// Throws std::invalid_argument if max_degree is below the top predicted generator degree.
MinimalityReport minimality_report(int d, int n, int max_degree, const PrimeFieldConfig& cfg, const MacaulayOptions& options = {});

/// h_e = binomial(N-1+e, e) - dim I_e for e = 0..max_degree, N = number of variables.
std::vector<BigInt> truncated_hilbert(std::span<const SparsePoly<Zp>> generators, int nvars, int max_degree,
                                      const PrimeFieldConfig& cfg, const MacaulayOptions& options = {});

struct HilbertComparison {
  int d = 0;
  int n = 0;
  std::uint32_t modulus = 0;
  std::uint64_t seed = 0;
  std::vector<BigInt> observed;   // from Macaulay ranks
  std::vector<BigInt> predicted;  // series of N(C_1)/(1-t)^{n^2}
  bool passed() const { return observed == predicted; }
};

HilbertComparison hilbert_comparison(int d, int n, int max_degree, const PrimeFieldConfig& cfg, const MacaulayOptions& options = {});

}  // namespace kalvar
