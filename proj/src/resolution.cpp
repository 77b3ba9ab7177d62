#include "kalvar/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "kalvar/bott.hpp"

namespace kalvar {

void KalmanParams::validate() const {
  if (!(1 <= s && s <= d && d < n)) {
    std::ostringstream os;
    os << "invalid Kalman parameters s=" << s << " d=" << d << " n=" << n << " (need 1 <= s <= d < n)";
    throw std::invalid_argument(os.str());
  }
}

std::string to_string(Part p) {
  switch (p) {
    case Part::I: return "I";
    case Part::II: return "II";
    case Part::III: return "III";
  }
  return "?";
}

std::string ModuleId::to_string() const {
  switch (kind) {
    case ModuleKind::Normalization: return "normalization(" + std::to_string(s) + ")";
    case ModuleKind::C: return "C(" + std::to_string(s) + ")";
    case ModuleKind::B: return "B(" + std::to_string(s) + ")";
  }
  return "?";
}

BettiTable::BettiTable(ModuleId id, int d, int n, std::vector<RepTerm> terms)
    : id_(id), d_(d), n_(n), terms_(std::move(terms)) {
  std::stable_sort(terms_.begin(), terms_.end(), [](const RepTerm& a, const RepTerm& b) {
    return std::tie(a.hom_degree, a.twist) < std::tie(b.hom_degree, b.twist);
  });
}

std::map<std::pair<int, int>, BigInt> BettiTable::table() const {
  std::map<std::pair<int, int>, BigInt> out;
  for (const auto& t : terms_) out[{t.hom_degree, t.twist}] += t.multiplicity;
  return out;
}

BigInt BettiTable::at(int hom_degree, int twist) const {
  BigInt total = 0;
  for (const auto& t : terms_)
    if (t.hom_degree == hom_degree && t.twist == twist) total += t.multiplicity;
  return total;
}

BigInt BettiTable::rank(int hom_degree) const {
  BigInt total = 0;
  for (const auto& t : terms_)
    if (t.hom_degree == hom_degree) total += t.multiplicity;
  return total;
}

std::map<int, BigInt> BettiTable::row(int hom_degree) const {
  std::map<int, BigInt> out;
  for (const auto& t : terms_)
    if (t.hom_degree == hom_degree) out[t.twist] += t.multiplicity;
  return out;
}

std::string BettiTable::part_label(const RepTerm& t) const {
  if (id_.kind == ModuleKind::C) {
    if (t.origin_s != id_.s) return "carried";
    if (id_.s == d_) return "koszul";
  }
  return kalvar::to_string(t.part);
}

Part classify_part(int s, const Partition& lambda, const Partition& mu) {
  if (mu.length() == s) return Part::I;
  return lambda.length() <= s - 1 ? Part::II : Part::III;
}

namespace {

// All terms of Õ_s whose lambda lies in `lambda_box`; the mu box is always s × (d-s).
std::vector<RepTerm> enumerate_terms(int s, int d, int n, BoxConstraint lambda_box) {
  std::vector<RepTerm> terms;
  const auto mus = partitions_in_box({s, d - s});
  for (const auto& lambda : partitions_in_box(lambda_box)) {
    const Partition lambda_t = conjugate(lambda);
    for (const auto& mu : mus) {
      if (!lambda.contains(mu)) continue;
      const Partition mu_t = conjugate(mu);
      auto coh = bundle_cohomology({lambda, mu_t, s, d});
      if (!coh.outcome) continue;
      SkewShape w_shape(lambda_t, mu_t);
      BigInt w_dim = skew_schur_dim(w_shape, n - d);
      if (w_dim == 0) continue;

      RepTerm t;
      t.hom_degree = lambda.size() - coh.outcome->degree;
      t.twist = lambda.size();
      t.eta = coh.outcome->eta;
      t.w_shape = std::move(w_shape);
      t.part = classify_part(s, lambda, mu);
      t.lambda = lambda;
      t.mu = mu;
      t.origin_s = s;
      t.multiplicity = coh.multiplicity * w_dim;
      terms.push_back(std::move(t));
    }
  }
  return terms;
}

Partition closed_form_lambda(int s, int d, const Partition& mu) {
  std::vector<int> parts{d - s + 1};
  for (int i = 0; i < s - 1; ++i) parts.push_back(mu[static_cast<std::size_t>(i)] + 1);
  return Partition(std::move(parts));
}

std::string describe(const std::map<std::pair<int, int>, BigInt>& table) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [key, mult] : table) {
    os << (first ? "" : ", ") << '(' << key.first << ',' << key.second << "):" << mult;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

BettiTable resolution_normalization(const KalmanParams& params) {
  params.validate();
  const auto [s, d, n] = params;
  return BettiTable({ModuleKind::Normalization, s}, d, n, enumerate_terms(s, d, n, {s, n - s}));
}

BettiTable split_parts(const BettiTable& table) {
  if (table.id().kind != ModuleKind::Normalization) throw std::invalid_argument("split_parts: expects a normalization table, got " + table.id().to_string());
  std::vector<RepTerm> terms = table.terms();
  for (auto& t : terms) t.part = classify_part(table.id().s, t.lambda, t.mu);
  return BettiTable(table.id(), table.d(), table.n(), std::move(terms));
}

PartIIIProfile part_III_profile(const KalmanParams& params) {
  const auto table = resolution_normalization(params);
  const auto [s, d, n] = params;
  PartIIIProfile out;
  out.check.name = "part-III-profile s=" + std::to_string(s) + " d=" + std::to_string(d) + " n=" + std::to_string(n);

  using Key = std::pair<Partition, Partition>;
  struct Value {
    std::vector<int> eta;
    int twist;
    BigInt mult;
    bool operator==(const Value&) const = default;
  };
  std::map<Key, Value> observed, expected;

  for (const auto& t : table.terms()) {
    if (t.part != Part::III) continue;
    out.terms.push_back(t);
    if (t.hom_degree < s)
      out.check.fail("III term below hom_degree s: lambda=" + t.lambda.to_string() + " mu=" + t.mu.to_string() + " i=" + std::to_string(t.hom_degree));
    if (t.hom_degree == s) observed[{t.lambda, t.mu}] = {t.eta, t.twist, t.multiplicity};
  }

  const std::vector<int> top(static_cast<std::size_t>(d), 1);
  for (const auto& mu : partitions_in_box({s - 1, d - s})) {
    Partition lambda = closed_form_lambda(s, d, mu);
    BigInt mult = skew_schur_dim(SkewShape(conjugate(lambda), conjugate(mu)), n - d);
    if (mult == 0) continue;
    int twist = lambda.size();
    expected[{std::move(lambda), mu}] = {top, twist, mult};
  }

  for (const auto& [key, v] : expected) {
    auto it = observed.find(key);
    if (it == observed.end())
      out.check.fail("missing closed-form term lambda=" + key.first.to_string() + " mu=" + key.second.to_string());
    else if (!(it->second == v))
      out.check.fail("closed-form mismatch at lambda=" + key.first.to_string() + " mu=" + key.second.to_string());
  }
  for (const auto& [key, v] : observed)
    if (!expected.contains(key)) out.check.fail("unexpected III term at hom_degree s: lambda=" + key.first.to_string() + " mu=" + key.second.to_string());
  return out;
}

BettiTable resolution_B(const KalmanParams& params) {
  auto table = resolution_normalization(params);
  std::vector<RepTerm> terms = table.terms();
  for (auto& t : terms) t.twist += params.s * (params.s - 1) / 2;
  return BettiTable({ModuleKind::B, params.s}, params.d, params.n, std::move(terms));
}

BettiTable resolution_C(int s, int d, int n) {
  KalmanParams{s, d, n}.validate();
  auto normalization = resolution_normalization({s, d, n});
  if (s == d) {
    return BettiTable({ModuleKind::C, d}, d, n, normalization.terms());
  }

  // 0 -> C_s -> Õ_s -> C_{s+1}(-s) -> 0. Part I of Õ_s cancels against the image of
  // part II of Õ_{s+1}(-s); every other term of C_{s+1}(-s) moves down one step.
  std::vector<RepTerm> terms;
  for (const auto& t : normalization.terms())
    if (t.part != Part::I) terms.push_back(t);

  const auto next = resolution_C(s + 1, d, n);
  for (RepTerm t : next.terms()) {
    if (t.origin_s == s + 1 && t.part == Part::II) continue;
    t.hom_degree -= 1;
    t.twist += s;
    if (t.hom_degree < 0) throw std::logic_error("resolution_C: carried term lands in negative homological degree");
    terms.push_back(std::move(t));
  }
  return BettiTable({ModuleKind::C, s}, d, n, std::move(terms));
}

CheckResult ses_closed_form_check(const BettiTable& c_table) {
  if (c_table.id().kind != ModuleKind::C) throw std::invalid_argument("ses_closed_form_check: expects a C table");
  const int s = c_table.id().s, d = c_table.d(), n = c_table.n();
  CheckResult r{"ses-closed-form s=" + std::to_string(s) + " d=" + std::to_string(d) + " n=" + std::to_string(n), true, ""};

  std::map<std::pair<int, int>, BigInt> expected;
  // Bott terms with lambda ⊆ (s-1) × (n-s), mu ⊆ (s-1) × (d-s)
  for (const auto& t : enumerate_terms(s, d, n, {s - 1, n - s}))
    if (t.mu.length() <= s - 1 && t.hom_degree <= s) expected[{t.hom_degree, t.twist}] += t.multiplicity;
  for (int k = s; k <= d; ++k) {
    for (const auto& mu : partitions_in_box({k - 1, d - k})) {
      Partition lambda = closed_form_lambda(k, d, mu);
      BigInt mult = skew_schur_dim(SkewShape(conjugate(lambda), conjugate(mu)), n - d);
      if (mult == 0) continue;
      expected[{s, lambda.size() + (s + k - 1) * (k - s) / 2}] += mult;
    }
  }

  std::map<std::pair<int, int>, BigInt> observed;
  for (const auto& [key, mult] : c_table.table())
    if (key.first <= s) observed[key] = mult;

  if (observed != expected) r.fail("rows 0.." + std::to_string(s) + " observed " + describe(observed) + " expected " + describe(expected));
  return r;
}

CheckResult identification_check(const KalmanParams& params) {
  params.validate();
  const auto [s, d, n] = params;
  CheckResult r{"identification s=" + std::to_string(s) + " d=" + std::to_string(d) + " n=" + std::to_string(n), true, ""};
  if (s == d) return r;

  // (i, twist, lambda^T/mu^T, eta) multisets
  using Key = std::tuple<int, int, std::string, std::vector<int>, std::string>;
  std::map<Key, BigInt> part_one, part_two;
  const auto lower = resolution_normalization(params);
  const auto upper = resolution_normalization({s + 1, d, n});
  for (const auto& t : lower.terms()) {
    if (t.part != Part::I) continue;
    // dropping the full first column of lambda and mu leaves S_{lambda^T/mu^T} W unchanged
    const Partition lt = tilde_shift(t.lambda, s), mt = tilde_shift(t.mu, s);
    part_one[{t.hom_degree, t.twist, SkewShape(conjugate(lt), conjugate(mt)).to_string(), t.eta, lt.to_string() + mt.to_string()}] += t.multiplicity;
  }
  for (const auto& t : upper.terms())
    if (t.part == Part::II) part_two[{t.hom_degree, t.twist + s, t.w_shape.to_string(), t.eta, t.lambda.to_string() + t.mu.to_string()}] += t.multiplicity;

  if (part_one != part_two) r.fail("part I of Õ_s and part II of Õ_{s+1}(-s) differ");
  return r;
}

std::vector<GeneratorRecord> minimal_generators(int d, int n) {
  KalmanParams{1, d, n}.validate();
  std::vector<GeneratorRecord> out;
  for (int s = 1; s <= d; ++s) {
    for (const auto& mu : partitions_in_box({s - 1, d - s})) {
      GeneratorRecord g;
      g.s = s;
      g.mu = mu;
      g.lambda = closed_form_lambda(s, d, mu);
      g.degree = g.lambda.size() + s * (s - 1) / 2;
      g.multiplicity = skew_schur_dim(SkewShape(conjugate(g.lambda), conjugate(mu)), n - d);
      g.row_composition.assign(static_cast<std::size_t>(d), 0);
      for (int i = 0; i < s; ++i) g.row_composition[static_cast<std::size_t>(i)] = g.lambda[static_cast<std::size_t>(i)] - mu[static_cast<std::size_t>(i)];
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::map<int, BigInt> generator_counts(const std::vector<GeneratorRecord>& records) {
  std::map<int, BigInt> out;
  for (const auto& g : records)
    if (g.contributes()) out[g.degree] += g.multiplicity;
  return out;
}

HilbertSeries hilbert_numerator(const BettiTable& table) {
  HilbertSeries h;
  h.denom_power = table.n() * table.n();
  for (const auto& t : table.terms())
    h.numerator += IntPoly::monomial(t.hom_degree % 2 ? BigInt(-t.multiplicity) : t.multiplicity, t.twist);
  return h;
}

CheckResult les_euler_check(int d, int n) {
  KalmanParams{1, d, n}.validate();
  CheckResult r{"les-euler d=" + std::to_string(d) + " n=" + std::to_string(n), true, ""};
  IntPoly alternating;
  for (int s = 1; s <= d; ++s) {
    IntPoly nb = hilbert_numerator(resolution_B({s, d, n})).numerator;
    if (s % 2) alternating += nb;
    else alternating -= nb;
  }
  IntPoly c1 = hilbert_numerator(resolution_C(1, d, n)).numerator;
  if (alternating != c1) r.fail("difference " + (alternating - c1).to_string());
  return r;
}

PdReg pd_and_reg(const BettiTable& table) {
  PdReg out;
  bool any = false;
  for (const auto& t : table.terms()) {
    if (t.multiplicity == 0) continue;
    if (!any) {
      out = {t.hom_degree, t.twist - t.hom_degree};
      any = true;
    }
    out.pd = std::max(out.pd, t.hom_degree);
    out.reg = std::max(out.reg, t.twist - t.hom_degree);
  }
  return out;
}

int codim_from_hilbert(const HilbertSeries& h) { return h.numerator.order_at_one(); }

}  // namespace kalvar
