#include "kalvar/bott.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace kalvar {

BottResult dotted_bott(const WeightVector& nu) {
  const int d = nu.length();
  BottResult r;
  auto& t = r.trace;
  t.rho.resize(static_cast<std::size_t>(d));
  t.shifted.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    t.rho[static_cast<std::size_t>(i)] = d - 1 - i;
    t.shifted[static_cast<std::size_t>(i)] = nu.entries[static_cast<std::size_t>(i)] + d - 1 - i;
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (t.shifted[static_cast<std::size_t>(i)] < t.shifted[static_cast<std::size_t>(j)]) ++t.inversions;

  t.sorted_shifted = t.shifted;
  std::sort(t.sorted_shifted.begin(), t.sorted_shifted.end(), std::greater<>());
  if (std::adjacent_find(t.sorted_shifted.begin(), t.sorted_shifted.end()) != t.sorted_shifted.end()) return r;

  Cohomology c;
  c.degree = t.inversions;
  c.eta.resize(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) c.eta[static_cast<std::size_t>(i)] = t.sorted_shifted[static_cast<std::size_t>(i)] - t.rho[static_cast<std::size_t>(i)];
  r.outcome = std::move(c);
  return r;
}

WeightVector bundle_weight(const BundleTerm& term) {
  const int q = term.d - term.s;
  if (term.s < 0 || q < 0) throw std::invalid_argument("bundle_weight: need 0 <= s <= d");
  if (term.lambda.length() > term.s)
    throw std::invalid_argument("bundle_weight: l(lambda) = " + std::to_string(term.lambda.length()) + " exceeds rank s = " + std::to_string(term.s));
  if (term.mu_t.length() > q)
    throw std::invalid_argument("bundle_weight: l(mu^T) = " + std::to_string(term.mu_t.length()) + " exceeds rank d - s = " + std::to_string(q));

  WeightVector nu;
  nu.entries.assign(static_cast<std::size_t>(term.d), 0);
  const int m = term.mu_t.length();
  // Q^* block: negate and reverse mu^T, right aligned
  for (int k = 0; k < m; ++k) nu.entries[static_cast<std::size_t>(q - 1 - k)] = -term.mu_t[static_cast<std::size_t>(k)];
  for (int k = 0; k < term.s; ++k) nu.entries[static_cast<std::size_t>(q + k)] = term.lambda[static_cast<std::size_t>(k)];
  return nu;
}

BundleCohomology bundle_cohomology(const BundleTerm& term) {
  BundleCohomology out;
  out.outcome = dotted_bott(bundle_weight(term)).outcome;
  out.multiplicity = out.outcome ? schur_dim(std::span<const int>(out.outcome->eta), term.d) : BigInt(0);
  return out;
}

}  // namespace kalvar
