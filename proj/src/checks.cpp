#include "kalvar/checks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kalvar/bott.hpp"
#include "kalvar/kalman_matrix.hpp"

namespace kalvar {

namespace {

std::string params_tag(int s, int d, int n) {
  std::ostringstream os;
  os << "s=" << s << " d=" << d << " n=" << n;
  return os.str();
}

// Searches all permutations w for w(nu + rho) strictly decreasing.
bool bott_agrees_with_search(const std::vector<int>& nu, std::string& why) {
  const int d = static_cast<int>(nu.size());
  std::vector<int> shifted(nu);
  for (int i = 0; i < d; ++i) shifted[static_cast<std::size_t>(i)] += d - 1 - i;

  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  int found = 0, length = -1;
  std::vector<int> eta;
  do {
    bool strict = true;
    for (int i = 0; i + 1 < d && strict; ++i)
      strict = shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] > shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i + 1)])];
    if (!strict) continue;
    ++found;
    length = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++length;
    eta.assign(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) eta[static_cast<std::size_t>(i)] = shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] - (d - 1 - i);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const auto got = dotted_bott({nu}).outcome;
  if (found > 1) {
    why = "more than one sorting permutation";
    return false;
  }
  if (found == 0) {
    if (got) why = "search says vanishing, solver says degree " + std::to_string(got->degree);
    return !got;
  }
  if (!got) {
    why = "solver says vanishing, search found degree " + std::to_string(length);
    return false;
  }
  if (got->degree != length || got->eta != eta) {
    why = "degree/eta disagree";
    return false;
  }
  return true;
}

}  // namespace

CheckResult check_bott(int max_d, int lo, int hi) {
  CheckResult r{"bott d<=" + std::to_string(max_d) + " entries in [" + std::to_string(lo) + "," + std::to_string(hi) + "]", true, ""};
  long checked = 0;
  for (int d = 1; d <= max_d; ++d) {
    std::vector<int> nu(static_cast<std::size_t>(d), lo);
    while (true) {
      std::string why;
      ++checked;
      if (!bott_agrees_with_search(nu, why)) {
        std::ostringstream os;
        os << "nu=(";
        for (std::size_t i = 0; i < nu.size(); ++i) os << (i ? "," : "") << nu[i];
        os << "): " << why;
        r.fail(os.str());
        return r;
      }
      int k = d - 1;
      while (k >= 0 && nu[static_cast<std::size_t>(k)] == hi) nu[static_cast<std::size_t>(k--)] = lo;
      if (k < 0) break;
      ++nu[static_cast<std::size_t>(k)];
    }
  }
  r.detail = std::to_string(checked) + " weights";
  return r;
}

CheckResult check_part_iii(const KalmanParams& params) { return part_III_profile(params).check; }

CheckResult check_f0_counts(const KalmanParams& params) {
  const auto [s, d, n] = params;
  CheckResult r{"f0-counts " + params_tag(s, d, n), true, ""};
  const auto table = resolution_normalization(params);
  std::map<std::pair<Part, int>, BigInt> observed, expected;
  for (const auto& t : table.terms()) {
    if (t.hom_degree != 0) continue;
    if (t.part == Part::III) r.fail("III term in F_0");
    observed[{t.part, t.twist}] += t.multiplicity;
  }
  for (const auto& mu : partitions_in_box({s, d - s})) expected[{mu.length() == s ? Part::I : Part::II, mu.size()}] += 1;
  if (observed != expected) r.fail("F_0 split differs from the count of mu in s x (d-s)");
  return r;
}

CheckResult check_generators_match(int d, int n) {
  CheckResult r{"generators-match d=" + std::to_string(d) + " n=" + std::to_string(n), true, ""};
  const auto row = resolution_C(1, d, n).row(1);
  const auto predicted = generator_counts(minimal_generators(d, n));
  if (row != predicted) {
    std::ostringstream os;
    os << "F_1 of C_1:";
    for (const auto& [tw, m] : row) os << ' ' << tw << 'x' << m;
    os << " vs closed form:";
    for (const auto& [tw, m] : predicted) os << ' ' << tw << 'x' << m;
    r.fail(os.str());
  }
  return r;
}

CheckResult check_pd_reg(int d, int n) {
  CheckResult r{"pd-reg d=" + std::to_string(d) + " n=" + std::to_string(n), true, ""};
  const auto got = pd_and_reg(resolution_C(1, d, n));
  const int pd = d * (n - d) - d + 1, reg = d * (d + 1) / 2 - 1;
  std::ostringstream os;
  os << "pd " << got.pd << " (formula " << pd << "), reg " << got.reg << " (formula " << reg << ")";
  if (got.pd != pd || got.reg != reg) r.fail(os.str());
  else r.detail = os.str();
  return r;
}

CheckResult check_codim(const KalmanParams& params) {
  const auto [s, d, n] = params;
  CheckResult r{"codim " + params_tag(s, d, n), true, ""};
  const int got = codim_from_hilbert(hilbert_numerator(resolution_normalization(params)));
  if (got != s * (n - d)) r.fail("normalization codim " + std::to_string(got) + ", expected " + std::to_string(s * (n - d)));
  if (s == 1) {
    const int c1 = codim_from_hilbert(hilbert_numerator(resolution_C(1, d, n)));
    if (c1 != n - d) r.fail("C_1 codim " + std::to_string(c1) + ", expected " + std::to_string(n - d));
  }
  return r;
}

std::vector<CheckResult> check_trace(int d) {
  std::vector<CheckResult> out;
  for (int i = 1; i <= d; ++i) out.push_back(trace_identity_check(d, i).check);
  return out;
}

CheckResult check_minors(int d, int n, int trials, const PrimeFieldConfig& cfg) {
  CheckResult r{"minors-vanish d=" + std::to_string(d) + " n=" + std::to_string(n), true, ""};
  const auto minors = kalman_minors(d, n, cfg);
  const auto rep = vanishing_test(minors, d, n, trials, cfg);
  if (!rep.passed()) {
    const auto& f = rep.failures.front();
    r.fail(std::to_string(rep.failures.size()) + " nonzero evaluations, first: trial " + std::to_string(f.trial) + " minor " + std::to_string(f.generator) + " value " + std::to_string(f.value));
  }
  // x_11 is not in the ideal; it must be caught by the same points
  const auto probe = SparsePoly<Zp>::variable(n * n, 0, Zp(1, cfg.modulus));
  const auto sensitivity = vanishing_test(std::span(&probe, 1), d, n, trials, cfg);
  if (trials > 0 && sensitivity.passed()) r.fail("x_11 vanished at every sample point; the test has no power");
  if (r.passed) r.detail = std::to_string(minors.size()) + " minors x " + std::to_string(trials) + " points";
  return r;
}

std::vector<CheckResult> check_les(int d, int n) {
  std::vector<CheckResult> out;
  out.push_back(les_euler_check(d, n));
  for (int s = 1; s <= d; ++s) {
    out.push_back(identification_check({s, d, n}));
    out.push_back(ses_closed_form_check(resolution_C(s, d, n)));
  }
  return out;
}

}  // namespace kalvar
