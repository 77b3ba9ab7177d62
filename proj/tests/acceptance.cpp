// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "kalvar/checks.hpp"
#include "kalvar/kalman_matrix.hpp"
#include "kalvar/resolution.hpp"
#include "kalvar/verify.hpp"

using namespace kalvar;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void absorb(const CheckResult& r) {
    if (r.passed) return;
    passed = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + r.name + ": " + r.detail;
  }
  void fail(const std::string& why) { absorb({"", false, why}); }
};

bool run(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "criterion " << id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << title << " (" << secs << "s)";
  if (!o.detail.empty()) os << "  " << o.detail;
  std::cout << os.str() << std::endl;
  return o.passed;
}

Outcome bott_oracle() {
  Outcome o;
  o.absorb(check_bott(5, -4, 6));
  return o;
}

Outcome part_iii() {
  Outcome o;
  for (int d = 1; d <= 5; ++d)
    for (int n = d + 1; n <= 8; ++n)
      for (int s = 1; s <= std::min(d, 3); ++s) o.absorb(check_part_iii({s, d, n}));
  return o;
}

Outcome f0_counts() {
  Outcome o;
  for (int d = 1; d <= 5; ++d)
    for (int n = d + 1; n <= 8; ++n)
      for (int s = 1; s <= d; ++s) o.absorb(check_f0_counts({s, d, n}));
  return o;
}

Outcome hypersurfaces() {
  Outcome o;
  const PrimeFieldConfig cfg{32003, 1};
  for (int d = 2; d <= 4; ++d) {
    const int n = d + 1, degree = d * (d + 1) / 2;
    const auto counts = generator_counts(minimal_generators(d, n));
    if (counts != std::map<int, BigInt>{{degree, 1}}) o.fail("d=" + std::to_string(d) + ": closed form is not a single equation of degree " + std::to_string(degree));
    const auto det = determinant(reduced_kalman_matrix(d, n, cfg.field()));
    if (det.is_zero() || !det.is_homogeneous() || det.total_degree() != degree)
      o.fail("d=" + std::to_string(d) + ": determinant has degree " + std::to_string(det.total_degree()));
    const auto rep = vanishing_test(std::span(&det, 1), d, n, 100, cfg);
    if (!rep.passed()) o.fail("d=" + std::to_string(d) + ": determinant nonzero at " + std::to_string(rep.failures.size()) + " of 100 points");
  }
  return o;
}

Outcome trace_identity() {
  Outcome o;
  for (int d = 1; d <= 4; ++d)
    for (const auto& r : check_trace(d)) o.absorb(r);
  return o;
}

Outcome minimality() {
  Outcome o;
  struct Case {
    int d, n;
    std::map<int, BigInt> expected;
  };
  const std::vector<Case> cases{{2, 4, {{2, 1}, {3, 3}}}, {2, 5, {{2, 3}, {3, 6}}}, {3, 4, {{6, 1}}}};
  for (const auto& c : cases) {
    const std::string tag = "(" + std::to_string(c.d) + "," + std::to_string(c.n) + ")";
    if (generator_counts(minimal_generators(c.d, c.n)) != c.expected) o.fail(tag + ": closed form differs from the expected counts");
    for (std::uint32_t p : {32003u, 65521u}) {
      const auto rep = minimality_report(c.d, c.n, c.expected.rbegin()->first, PrimeFieldConfig{p, 1});
      for (const auto& row : rep.per_degree) {
        auto it = c.expected.find(row.e);
        const BigInt want = it == c.expected.end() ? BigInt(0) : it->second;
        if (BigInt(static_cast<long>(row.new_gens)) != want)
          o.fail(tag + " p=" + std::to_string(p) + " degree " + std::to_string(row.e) + ": rank gives " + std::to_string(row.new_gens) + " new generators, expected " + want.get_str());
      }
      if (!rep.passed()) o.fail(tag + " p=" + std::to_string(p) + ": report disagrees with the closed form");
    }
  }
  return o;
}

Outcome les_euler() {
  Outcome o;
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= 7; ++n) o.absorb(les_euler_check(d, n));
  return o;
}

Outcome hilbert() {
  Outcome o;
  for (auto [d, n] : {std::pair{2, 3}, std::pair{2, 4}}) {
    const auto cmp = hilbert_comparison(d, n, 6, PrimeFieldConfig{32003, 1});
    if (!cmp.passed()) {
      std::ostringstream os;
      os << "(" << d << "," << n << ") observed";
      for (const auto& v : cmp.observed) os << ' ' << v;
      os << " predicted";
      for (const auto& v : cmp.predicted) os << ' ' << v;
      o.fail(os.str());
    }
  }
  return o;
}

Outcome pd_reg() {
  Outcome o;
  for (auto [d, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 4}, std::pair{3, 5}}) o.absorb(check_pd_reg(d, n));
  return o;
}

Outcome codimension() {
  Outcome o;
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= 6; ++n)
      for (int s = 1; s <= std::min(d, 3); ++s) o.absorb(check_codim({s, d, n}));
  return o;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "dotted Bott action vs permutation search, d<=5, entries in [-4,6]", bott_oracle);
  ok &= run(2, "part III vanishing and closed form, s<=3, d<=5, n<=8", part_iii);
  ok &= run(3, "F_0 counts, s<=d<=5, n<=8", f0_counts);
  ok &= run(4, "hypersurfaces n=d+1, d=2,3,4", hypersurfaces);
  ok &= run(5, "trace-minor identity, i<=d<=4", trace_identity);
  ok &= run(6, "generator minimality over GF(32003) and GF(65521)", minimality);
  ok &= run(7, "long exact sequence Euler characteristic, d<=4, n<=7", les_euler);
  ok &= run(8, "Hilbert function to degree 6 for (2,3), (2,4)", hilbert);
  ok &= run(9, "projective dimension and regularity", pd_reg);
  ok &= run(10, "codimension from the Hilbert numerator", codimension);
  std::cout << (ok ? "all criteria pass" : "some criteria FAIL") << std::endl;
  return ok ? 0 : 1;
}
