#include <doctest.h>

#include <functional>
#include <map>

#include "kalvar/partitions.hpp"

using namespace kalvar;

namespace {

// Cell-by-cell enumeration of semistandard fillings, rows weakly increasing,
// columns strictly increasing.
long count_ssyt(const Partition& outer, const Partition& inner, int m) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = inner[static_cast<std::size_t>(r)]; c < outer[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::map<std::pair<int, int>, int> fill;
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[k];
    for (int v = 1; v <= m; ++v) {
      auto left = fill.find({r, c - 1});
      if (left != fill.end() && left->second > v) continue;
      auto up = fill.find({r - 1, c});
      if (up != fill.end() && up->second >= v) continue;
      fill[{r, c}] = v;
      rec(k + 1);
      fill.erase({r, c});
    }
  };
  rec(0);
  return count;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("partition construction trims zeros and rejects bad input") {
  CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(Partition({0, 0}).empty());
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition({3, 1}).to_string() == "(3,1)");
  CHECK(Partition{}.to_string() == "()");
  CHECK(Partition({4, 2, 2}).size() == 8);
  CHECK(Partition({2, 1}).contains(Partition({1, 1})));
  CHECK_FALSE(Partition({2}).contains(Partition({1, 1})));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition({1, 1, 1})) == Partition({3}));
  CHECK(conjugate(Partition({3, 3, 3, 1, 1})) == Partition({5, 3, 3}));
  for (const auto& p : partitions_in_box({4, 5})) {
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).size() == p.size());
  }
}

TEST_CASE("partitions in a box") {
  CHECK(partitions_in_box({1, 1}) == std::vector<Partition>{Partition{}, Partition({1})});
  CHECK(partitions_in_box({2, 1}) == std::vector<Partition>{Partition{}, Partition({1}), Partition({1, 1})});
  for (int r = 0; r <= 4; ++r)
    for (int c = 0; c <= 4; ++c) CHECK(static_cast<long>(partitions_in_box({r, c}).size()) == binom(r + c, r));
  const auto sized = partitions_in_box({3, 3}, {.exact_size = 4, .exact_length = std::nullopt});
  CHECK(sized == std::vector<Partition>{Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1})});
  const auto two_rows = partitions_in_box({3, 2}, {.exact_size = std::nullopt, .exact_length = 2});
  CHECK(two_rows.size() == 3);
  for (const auto& p : two_rows) CHECK(p.length() == 2);
}

TEST_CASE("schur_dim matches tableau enumeration") {
  CHECK(schur_dim(Partition({2, 1}), 3) == 8);
  for (int m = 1; m <= 5; ++m)
    for (int k = 0; k <= m + 1; ++k) CHECK(schur_dim(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), m) == binom(m, k));
  for (int m = 1; m <= 4; ++m)
    for (const auto& p : partitions_in_box({4, 3})) CHECK(schur_dim(p, m) == count_ssyt(p, {}, m));
}

TEST_CASE("schur_dim of weights with negative entries") {
  // twisting by det^k does not change the dimension
  const std::vector<int> shifted{1, 0, -2};
  const std::vector<int> base{3, 2, 0};
  CHECK(schur_dim(shifted, 3) == schur_dim(base, 3));
  const std::vector<int> dual{0, -1};
  CHECK(schur_dim(dual, 2) == 2);
  const std::vector<int> unsorted{0, 1};
  CHECK_THROWS_AS(schur_dim(unsorted, 2), std::invalid_argument);
  const std::vector<int> short_negative{-1};
  CHECK_THROWS_AS(schur_dim(short_negative, 2), std::invalid_argument);
}

TEST_CASE("skew_schur_dim matches tableau enumeration") {
  CHECK(skew_schur_dim(SkewShape(Partition({2, 1}), Partition({1})), 2) == 4);
  CHECK(skew_schur_dim(SkewShape(Partition({2, 2}), Partition({1})), 2) == 2);
  for (int m = 1; m <= 3; ++m)
    for (const auto& outer : partitions_in_box({4, 4}))
      for (const auto& inner : partitions_in_box({4, 4}))
        if (outer.contains(inner)) CHECK(skew_schur_dim(SkewShape(outer, inner), m) == count_ssyt(outer, inner, m));
}

TEST_CASE("skew_schur_dim with empty inner equals schur_dim") {
  for (const auto& p : partitions_in_box({3, 4}))
    for (int m = 1; m <= 4; ++m) CHECK(skew_schur_dim(SkewShape(p), m) == schur_dim(p, m));
}

TEST_CASE("skew shape validation and horizontal strips") {
  CHECK_THROWS_AS(SkewShape(Partition({1}), Partition({2})), std::invalid_argument);
  CHECK(is_horizontal_strip(SkewShape(Partition({3, 1}), Partition({1}))));
  CHECK_FALSE(is_horizontal_strip(SkewShape(Partition({2, 2}), Partition({1}))));
  CHECK(SkewShape(Partition({2, 1}), Partition({1})).to_string() == "(2,1)/(1)");
}

TEST_CASE("cauchy terms decompose exterior powers") {
  CHECK(cauchy_terms(0, 2, 2).size() == 1);
  const auto two = cauchy_terms(2, 2, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].lambda == Partition({2}));
  CHECK(two[0].lambda_t == Partition({1, 1}));
  CHECK(two[1].lambda == Partition({1, 1}));
  for (int e = 1; e <= 3; ++e)
    for (int f = 1; f <= 3; ++f)
      for (int p = 0; p <= e * f; ++p) {
        BigInt total = 0;
        for (const auto& t : cauchy_terms(p, e, f)) total += schur_dim(t.lambda, e) * schur_dim(t.lambda_t, f);
        CHECK(total == binom(e * f, p));
      }
}

TEST_CASE("tilde_shift") {
  CHECK(tilde_shift(Partition({1, 1}), 2) == Partition{});
  CHECK(tilde_shift(Partition({3, 2, 1}), 3) == Partition({2, 1}));
  CHECK_THROWS_AS(tilde_shift(Partition({3, 2}), 3), std::invalid_argument);
}
