#include "kalvar/verify.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "kalvar/kalman_matrix.hpp"
#include "kalvar/resolution.hpp"

namespace kalvar {

void PrimeFieldConfig::validate(int d, int n) const {
  if (!is_prime(modulus)) throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not prime");
  if (modulus <= static_cast<std::uint64_t>(2 * d * (n - d)))
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " must exceed 2d(n-d) = " + std::to_string(2 * d * (n - d)));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool KalmanPoint::satisfies_eigen_equation() const {
  for (int i = 0; i < n; ++i) {
    Zp acc(0, eigval.modulus());
    for (int j = 0; j < n; ++j) acc += phi[static_cast<std::size_t>(i * n + j)] * eigvec[static_cast<std::size_t>(j)];
    if (!(acc == eigval * eigvec[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

KalmanPoint random_kalman_point(int d, int n, const PrimeFieldConfig& cfg, std::uint64_t stream) {
  if (!(1 <= d && d < n)) throw std::invalid_argument("random_kalman_point: need 1 <= d < n");
  const std::uint32_t p = cfg.modulus;
  std::mt19937_64 rng(derive_seed(cfg.seed, stream));
  auto draw = [&] { return Zp(static_cast<std::int64_t>(rng() % p), p); };

  KalmanPoint pt;
  pt.n = n;
  pt.eigvec.assign(static_cast<std::size_t>(n), Zp(0, p));
  bool nonzero = false;
  while (!nonzero) {
    for (int i = 0; i < d; ++i) {
      pt.eigvec[static_cast<std::size_t>(i)] = draw();
      nonzero = nonzero || !pt.eigvec[static_cast<std::size_t>(i)].is_zero();
    }
  }
  pt.eigval = draw();

  int pivot = 0;
  while (pt.eigvec[static_cast<std::size_t>(pivot)].is_zero()) ++pivot;

  pt.phi.assign(static_cast<std::size_t>(n * n), Zp(0, p));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != pivot) pt.phi[static_cast<std::size_t>(i * n + j)] = draw();

  // column `pivot` solves phi v = t v
  const Zp inv = pt.eigvec[static_cast<std::size_t>(pivot)].inverse();
  for (int i = 0; i < n; ++i) {
    Zp rest = pt.eigval * pt.eigvec[static_cast<std::size_t>(i)];
    for (int j = 0; j < d; ++j)
      if (j != pivot) rest -= pt.phi[static_cast<std::size_t>(i * n + j)] * pt.eigvec[static_cast<std::size_t>(j)];
    pt.phi[static_cast<std::size_t>(i * n + pivot)] = rest * inv;
  }
  return pt;
}

VanishingReport vanishing_test(std::span<const SparsePoly<Zp>> generators, int d, int n, int trials, const PrimeFieldConfig& cfg) {
  VanishingReport rep;
  rep.trials = trials;
  rep.generators = generators.size();
  rep.modulus = cfg.modulus;
  rep.seed = cfg.seed;
  const Zp zero(0, cfg.modulus);
  for (int t = 0; t < trials; ++t) {
    const auto pt = random_kalman_point(d, n, cfg, static_cast<std::uint64_t>(t));
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const Zp v = generators[g].evaluate(pt.phi, zero);
      if (!v.is_zero()) rep.failures.push_back({t, g, v.value()});
    }
  }
  return rep;
}

std::uint64_t graded_ideal_dimension(std::span<const SparsePoly<Zp>> generators, int e, const PrimeFieldConfig& cfg,
                                     const MacaulayOptions& options) {
  std::vector<SparsePoly<Zp>> usable;
  for (const auto& g : generators)
    if (!g.is_zero() && g.total_degree() <= e) usable.push_back(g);
  if (usable.empty()) return 0;
  return MacaulayMatrix::build(usable, e, cfg.modulus, options).rank(options.threads);
}

std::vector<SparsePoly<Zp>> kalman_minors(int d, int n, const PrimeFieldConfig& cfg) {
  std::vector<SparsePoly<Zp>> out;
  for (auto& m : all_maximal_minors(d, n, cfg.field())) out.push_back(std::move(m.poly));
  return out;
}

bool MinimalityReport::passed() const {
  return std::all_of(per_degree.begin(), per_degree.end(), [](const DegreeCount& c) { return c.matches(); });
}

MinimalityReport minimality_counts(std::span<const SparsePoly<Zp>> generators, int max_degree,
                                   const std::map<int, BigInt>& predicted, const PrimeFieldConfig& cfg,
                                   const MacaulayOptions& options) {
  MinimalityReport rep;
  rep.max_degree = max_degree;
  rep.modulus = cfg.modulus;
  rep.seed = cfg.seed;

  for (int e = 1; e <= max_degree; ++e) {
    std::vector<SparsePoly<Zp>> lower, upto;
    bool has_top = false;
    for (const auto& g : generators) {
      if (g.is_zero() || g.total_degree() > e) continue;
      upto.push_back(g);
      if (g.total_degree() < e) lower.push_back(g);
      else has_top = true;
    }
    DegreeCount c;
    c.e = e;
    c.lower_dim = graded_ideal_dimension(lower, e, cfg, options);
    c.ideal_dim = has_top ? graded_ideal_dimension(upto, e, cfg, options) : c.lower_dim;
    c.new_gens = static_cast<std::int64_t>(c.ideal_dim) - static_cast<std::int64_t>(c.lower_dim);
    auto it = predicted.find(e);
    c.predicted = it == predicted.end() ? BigInt(0) : it->second;
    rep.per_degree.push_back(std::move(c));
  }
  return rep;
}

MinimalityReport minimality_report(int d, int n, int max_degree, const PrimeFieldConfig& cfg, const MacaulayOptions& options) {
  KalmanParams{1, d, n}.validate();
  cfg.validate(d, n);
  const auto predicted = generator_counts(minimal_generators(d, n));
  if (!predicted.empty() && max_degree < predicted.rbegin()->first)
    throw std::invalid_argument("max_degree " + std::to_string(max_degree) + " is below the top generator degree " + std::to_string(predicted.rbegin()->first));
  const auto minors = kalman_minors(d, n, cfg);
  auto rep = minimality_counts(minors, max_degree, predicted, cfg, options);
  rep.d = d;
  rep.n = n;
  return rep;
}

std::vector<BigInt> truncated_hilbert(std::span<const SparsePoly<Zp>> generators, int nvars, int max_degree,
                                      const PrimeFieldConfig& cfg, const MacaulayOptions& options) {
  std::vector<BigInt> h;
  for (int e = 0; e <= max_degree; ++e) {
    const BigInt total = binomial(nvars - 1 + e, e);
    const std::uint64_t dim = graded_ideal_dimension(generators, e, cfg, options);
    h.push_back(total - BigInt(static_cast<unsigned long>(dim)));
  }
  return h;
}

HilbertComparison hilbert_comparison(int d, int n, int max_degree, const PrimeFieldConfig& cfg, const MacaulayOptions& options) {
  KalmanParams{1, d, n}.validate();
  cfg.validate(d, n);
  HilbertComparison cmp;
  cmp.d = d;
  cmp.n = n;
  cmp.modulus = cfg.modulus;
  cmp.seed = cfg.seed;
  const auto minors = kalman_minors(d, n, cfg);
  cmp.observed = truncated_hilbert(minors, n * n, max_degree, cfg, options);
  const auto series = hilbert_numerator(resolution_C(1, d, n));
  cmp.predicted = series.numerator.series_over_one_minus_t(series.denom_power, max_degree + 1);
  return cmp;
}

}  // namespace kalvar
