#include <doctest.h>

#include <random>

#include "kalvar/checks.hpp"
#include "kalvar/kalman_matrix.hpp"
#include "kalvar/verify.hpp"

using namespace kalvar;

namespace {

using ZPoly = SparsePoly<Zp>;

// Dense Gaussian elimination over GF(p), used as an oracle for the sparse rank.
std::uint64_t dense_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::uint64_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = Zp(static_cast<std::int64_t>(m[rank][c]), static_cast<std::uint32_t>(p)).inverse().value();
    for (auto& v : m[rank]) v = v * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

std::uint64_t oracle_dimension(const std::vector<ZPoly>& gens, int e, std::uint32_t p) {
  const int nv = gens.front().nvars();
  const auto cols = monomials_of_degree(nv, e);
  std::map<Monomial, std::size_t, GrevlexGreater> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = i;
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > e) continue;
    for (const auto& m : monomials_of_degree(nv, e - g.total_degree())) {
      std::vector<std::uint64_t> row(cols.size(), 0);
      for (const auto& [gm, c] : g.terms()) row[index.at(gm * m)] = c.value();
      rows.push_back(std::move(row));
    }
  }
  return dense_rank(std::move(rows), p);
}

ZPoly random_homogeneous(std::mt19937_64& rng, int nv, int degree, int terms, std::uint32_t p) {
  ZPoly g(nv);
  const auto mons = monomials_of_degree(nv, degree);
  for (int k = 0; k < terms; ++k) g.add_term(mons[rng() % mons.size()], Zp(static_cast<std::int64_t>(rng() % p), p));
  return g;
}

}  // namespace

TEST_CASE("field configuration") {
  CHECK_NOTHROW(PrimeFieldConfig{}.validate(2, 4));
  CHECK_THROWS_AS((PrimeFieldConfig{32004, 1}.validate(2, 4)), std::invalid_argument);
  CHECK_THROWS_AS((PrimeFieldConfig{7, 1}.validate(2, 4)), std::invalid_argument);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("random Kalman points") {
  const PrimeFieldConfig cfg{32003, 42};
  for (int d = 1; d <= 3; ++d)
    for (int n = d + 1; n <= 5; ++n)
      for (std::uint64_t t = 0; t < 10; ++t) {
        const auto pt = random_kalman_point(d, n, cfg, t);
        CHECK(pt.satisfies_eigen_equation());
        for (int i = d; i < n; ++i) CHECK(pt.eigvec[static_cast<std::size_t>(i)].is_zero());
      }
  const auto a = random_kalman_point(2, 4, cfg, 3), b = random_kalman_point(2, 4, cfg, 3);
  CHECK(a.phi == b.phi);
  CHECK_FALSE(random_kalman_point(2, 4, cfg, 4).phi == a.phi);
}

TEST_CASE("vanishing test") {
  const PrimeFieldConfig cfg{32003, 1};
  const std::vector<ZPoly> zero{ZPoly(9)};
  CHECK(vanishing_test(zero, 2, 3, 5, cfg).passed());

  const auto minors = kalman_minors(2, 3, cfg);
  REQUIRE(minors.size() == 1);
  CHECK(vanishing_test(minors, 2, 3, 50, cfg).passed());

  const std::vector<ZPoly> probe{ZPoly::variable(9, 0, Zp(1, 32003))};
  const auto rep = vanishing_test(probe, 2, 3, 20, cfg);
  CHECK(rep.failures.size() >= 15);

  for (int d = 1; d <= 3; ++d)
    for (int n = d + 1; n <= 5; ++n) CHECK(check_minors(d, n, 10, cfg).passed);
}

TEST_CASE("Macaulay rank agrees with dense elimination") {
  const std::uint32_t p = 101;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const int nv = 2 + static_cast<int>(rng() % 3);
    std::vector<ZPoly> gens;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) gens.push_back(random_homogeneous(rng, nv, 1 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 4), p));
    const int e = 2 + static_cast<int>(rng() % 2);
    MacaulayOptions opts;
    opts.threads = 1 + static_cast<unsigned>(trial % 3);
    if (trial % 2) opts.shuffle_seed = static_cast<std::uint64_t>(trial);
    std::vector<ZPoly> nonzero;
    for (auto& g : gens)
      if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) continue;
    CHECK(graded_ideal_dimension(nonzero, e, PrimeFieldConfig{p, 1}, opts) == oracle_dimension(nonzero, e, p));
  }
}

TEST_CASE("graded ideal dimension examples") {
  const PrimeFieldConfig cfg{32003, 1};
  const auto minors = kalman_minors(2, 3, cfg);
  CHECK(graded_ideal_dimension(minors, 3, cfg) == 1);
  CHECK(graded_ideal_dimension(minors, 4, cfg) == 9);
  CHECK(graded_ideal_dimension(minors, 2, cfg) == 0);
  CHECK(graded_ideal_dimension(kalman_minors(2, 4, cfg), 3, cfg) == 19);
  CHECK(graded_ideal_dimension({}, 3, cfg) == 0);
}

TEST_CASE("Macaulay build errors") {
  const PrimeFieldConfig cfg{32003, 1};
  const auto x = ZPoly::variable(4, 0, Zp(1, 32003)), y = ZPoly::variable(4, 1, Zp(1, 32003));
  const std::vector<ZPoly> mixed{x * y + x};
  CHECK_THROWS_AS(MacaulayMatrix::build(mixed, 3, 32003, {}), std::invalid_argument);
  const std::vector<ZPoly> ok{x * y};
  CHECK_THROWS_AS(MacaulayMatrix::build(ok, 3, 65521, {}), std::invalid_argument);
  MacaulayOptions tiny;
  tiny.column_cap = 5;
  CHECK_THROWS_AS(MacaulayMatrix::build(ok, 3, 32003, tiny), MacaulayCapExceeded);
  CHECK(monomial_count(4, 3) == 20);
  CHECK(monomials_of_degree(3, 2).size() == 6);
}

TEST_CASE("minimality and Hilbert reports") {
  const PrimeFieldConfig cfg{32003, 1};
  const auto rep = minimality_report(2, 4, 4, cfg);
  REQUIRE(rep.per_degree.size() == 4);
  CHECK(rep.passed());
  CHECK(rep.per_degree[1].new_gens == 1);
  CHECK(rep.per_degree[2].ideal_dim == 19);
  CHECK(rep.per_degree[2].new_gens == 3);
  CHECK_THROWS_AS(minimality_report(2, 4, 2, cfg), std::invalid_argument);

  const auto h = hilbert_comparison(2, 3, 4, cfg);
  CHECK(h.passed());
  CHECK(h.observed.front() == 1);
  CHECK(h.observed[1] == 9);

  const std::vector<BigInt> free_ring = truncated_hilbert(std::vector<ZPoly>{ZPoly(4)}, 4, 3, cfg);
  CHECK(free_ring == std::vector<BigInt>{1, 4, 10, 20});
}
