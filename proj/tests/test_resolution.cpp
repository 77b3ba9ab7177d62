#include <doctest.h>

#include "kalvar/checks.hpp"
#include "kalvar/resolution.hpp"

using namespace kalvar;

namespace {

using Table = std::map<std::pair<int, int>, BigInt>;

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::map<std::pair<int, int>, BigInt> parts_of(const BettiTable& t, Part p) {
  std::map<std::pair<int, int>, BigInt> out;
  for (const auto& term : t.terms())
    if (term.part == p) out[{term.hom_degree, term.twist}] += term.multiplicity;
  return out;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(KalmanParams{1, 1, 2}.validate());
  CHECK_THROWS_AS((KalmanParams{3, 2, 4}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KalmanParams{1, 3, 3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((KalmanParams{0, 2, 3}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(resolution_C(3, 2, 4), std::invalid_argument);
}

TEST_CASE("top normalization is the Koszul complex on gamma") {
  for (int d = 1; d <= 3; ++d)
    for (int n = d + 1; n <= d + 3; ++n) {
      const auto t = resolution_normalization({d, d, n}).table();
      Table expected;
      for (int i = 0; i <= d * (n - d); ++i) expected[{i, i}] = binom(d * (n - d), i);
      CHECK(t == expected);
      const auto c = resolution_C(d, d, n);
      CHECK(c.table() == expected);
      CHECK(pd_and_reg(c).pd == d * (n - d));
      CHECK(pd_and_reg(c).reg == 0);
      CHECK(hilbert_numerator(c).numerator == [&] {
        IntPoly p({1});
        for (int k = 0; k < d * (n - d); ++k) p = p * IntPoly::one_minus_t_pow(1);
        return p;
      }());
      CHECK(codim_from_hilbert(hilbert_numerator(c)) == d * (n - d));
    }
}

TEST_CASE("normalization for d=2, n=3, s=1 by hand") {
  const auto t = resolution_normalization({1, 2, 3});
  CHECK(t.table() == Table{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 2}, 2}});
  CHECK(parts_of(t, Part::II) == Table{{{0, 0}, 1}});
  CHECK(parts_of(t, Part::I) == Table{{{0, 1}, 1}, {{1, 2}, 2}});
  CHECK(parts_of(t, Part::III).empty());
  CHECK(t.id().to_string() == "normalization(1)");
}

TEST_CASE("C_1 for d=2, n=3 is a cubic hypersurface") {
  const auto c = resolution_C(1, 2, 3);
  CHECK(c.table() == Table{{{0, 0}, 1}, {{1, 3}, 1}});
  CHECK(hilbert_numerator(c).numerator.to_string() == "1 - t^3");
  CHECK(hilbert_numerator(c).denom_power == 9);
  CHECK(pd_and_reg(c).pd == 1);
  CHECK(pd_and_reg(c).reg == 2);
  CHECK(codim_from_hilbert(hilbert_numerator(c)) == 1);
  CHECK(c.id().to_string() == "C(1)");
}

TEST_CASE("C_1 for d=2, n=4") {
  const auto c = resolution_C(1, 2, 4);
  CHECK(c.row(1) == std::map<int, BigInt>{{2, 1}, {3, 3}});
  CHECK(pd_and_reg(c).pd == 3);
  CHECK(pd_and_reg(c).reg == 2);
}

TEST_CASE("B is a twisted normalization") {
  for (int s = 1; s <= 3; ++s) {
    const auto o = resolution_normalization({s, 3, 5}).table();
    const auto b = resolution_B({s, 3, 5});
    CHECK(b.id().to_string() == "B(" + std::to_string(s) + ")");
    Table shifted;
    for (const auto& [k, m] : o) shifted[{k.first, k.second + s * (s - 1) / 2}] = m;
    CHECK(b.table() == shifted);
  }
}

TEST_CASE("split_parts only accepts normalization tables") {
  CHECK_NOTHROW(split_parts(resolution_normalization({1, 2, 4})));
  CHECK_THROWS_AS(split_parts(resolution_C(1, 2, 4)), std::invalid_argument);
}

TEST_CASE("part classification") {
  CHECK(classify_part(2, Partition({2, 1}), Partition({1, 1})) == Part::I);
  CHECK(classify_part(2, Partition({2}), Partition({1})) == Part::II);
  CHECK(classify_part(2, Partition({2, 1}), Partition({1})) == Part::III);
  CHECK(to_string(Part::III) == "III");
}

TEST_CASE("part III profile") {
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= 6; ++n)
      for (int s = 1; s <= std::min(d, 3); ++s) {
        const auto prof = part_III_profile({s, d, n});
        CHECK_MESSAGE(prof.check.passed, prof.check.detail);
        for (const auto& t : prof.terms) {
          CHECK(t.hom_degree >= s);
          CHECK(t.part == Part::III);
        }
      }
}

TEST_CASE("resolution tables are alternating sums with a free rank one start") {
  for (int d = 1; d <= 4; ++d)
    for (int n = d + 1; n <= 6; ++n)
      for (int s = 1; s <= d; ++s) {
        const auto t = resolution_normalization({s, d, n});
        CHECK(t.at(0, 0) == 1);
        // positive codimension: the numerator vanishes at t = 1
        CHECK(hilbert_numerator(t).numerator.value_at_one() == 0);
        for (const auto& term : t.terms()) CHECK(term.multiplicity > 0);
      }
}

TEST_CASE("generator closed form") {
  auto degrees = [](int d, int n) { return generator_counts(minimal_generators(d, n)); };
  CHECK(degrees(2, 4) == std::map<int, BigInt>{{2, 1}, {3, 3}});
  CHECK(degrees(2, 5) == std::map<int, BigInt>{{2, 3}, {3, 6}});
  CHECK(degrees(3, 4) == std::map<int, BigInt>{{6, 1}});
  CHECK(degrees(3, 5) == std::map<int, BigInt>{{4, 2}, {5, 2}, {6, 4}});
  for (int d = 1; d <= 5; ++d) CHECK(degrees(d, d + 1) == std::map<int, BigInt>{{d * (d + 1) / 2, 1}});
  // s = 1: binomial(n-d, d) minors of degree d taken from gamma alone
  for (int d = 1; d <= 3; ++d)
    for (int n = d + 1; n <= 7; ++n) {
      const auto g = minimal_generators(d, n).front();
      CHECK(g.s == 1);
      CHECK(g.degree == d);
      CHECK(g.multiplicity == binom(n - d, d));
    }
  for (const auto& g : minimal_generators(3, 5)) {
    int total = 0, weighted = 0;
    for (std::size_t r = 0; r < g.row_composition.size(); ++r) {
      total += g.row_composition[r];
      weighted += static_cast<int>(r) * g.row_composition[r];
    }
    CHECK(total == 3);
    CHECK(g.degree == 3 + weighted);
  }
}

TEST_CASE("library checks pass on small cases") {
  for (int d = 1; d <= 3; ++d)
    for (int n = d + 1; n <= 5; ++n) {
      const auto les = check_les(d, n);
      for (const auto& r : les) CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
      CHECK(check_generators_match(d, n).passed);
      CHECK(check_pd_reg(d, n).passed);
      for (int s = 1; s <= d; ++s) {
        CHECK(check_f0_counts({s, d, n}).passed);
        CHECK(check_codim({s, d, n}).passed);
        CHECK(check_part_iii({s, d, n}).passed);
      }
    }
  CHECK(check_bott(3, -2, 3).passed);
}
