#include "kalvar/macaulay.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>

namespace kalvar {

MacaulayCapExceeded::MacaulayCapExceeded(std::uint64_t required, std::uint64_t cap)
    : std::runtime_error("Macaulay matrix needs " + std::to_string(required) + " columns, cap is " + std::to_string(cap)),
      required_(required) {}

unsigned default_thread_count() {
  if (const char* env = std::getenv("KALVAR_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t monomial_count(int nvars, int degree) {
  BigInt c = binomial(nvars - 1 + degree, degree);
  return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars <= 0 || degree < 0) return out;
  Monomial cur(nvars);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur.exps[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(e);
      rec(var + 1, left - e);
    }
    cur.exps[static_cast<std::size_t>(var)] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

MacaulayMatrix MacaulayMatrix::build(std::span<const SparsePoly<Zp>> generators, int degree, std::uint32_t modulus,
                                     const MacaulayOptions& options) {
  if (generators.empty()) throw std::invalid_argument("MacaulayMatrix::build: no generators (number of variables unknown)");
  const int nvars = generators.front().nvars();
  for (const auto& g : generators) {
    if (g.nvars() != nvars) throw std::invalid_argument("MacaulayMatrix::build: generators over different variable sets");
    if (!g.is_homogeneous()) throw std::invalid_argument("MacaulayMatrix::build: generator is not homogeneous");
    for (const auto& [m, c] : g.terms())
      if (c.modulus() != modulus) throw std::invalid_argument("MacaulayMatrix::build: generator modulus differs from " + std::to_string(modulus));
  }
  const std::uint64_t needed = monomial_count(nvars, degree);
  if (needed > options.column_cap) throw MacaulayCapExceeded(needed, options.column_cap);

  MacaulayMatrix mm;
  mm.degree_ = degree;
  mm.modulus_ = modulus;
  mm.columns_ = monomials_of_degree(nvars, degree);

  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  index.reserve(mm.columns_.size());
  for (std::uint32_t i = 0; i < mm.columns_.size(); ++i) index.emplace(mm.columns_[i], i);

  std::unordered_map<int, std::vector<Monomial>> cofactors;
  for (const auto& g : generators) {
    if (g.is_zero() || g.total_degree() > degree) continue;
    const int q = degree - g.total_degree();
    auto it = cofactors.find(q);
    if (it == cofactors.end()) it = cofactors.emplace(q, monomials_of_degree(nvars, q)).first;
    for (const auto& m : it->second) {
      Row row;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
      entries.reserve(g.num_terms());
      for (const auto& [gm, c] : g.terms()) entries.emplace_back(index.at(gm * m), c.value());
      std::sort(entries.begin(), entries.end());
      for (auto [col, val] : entries) {
        row.cols.push_back(col);
        row.vals.push_back(val);
      }
      mm.rows_.push_back(std::move(row));
    }
  }

  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    for (std::size_t i = mm.rows_.size(); i > 1; --i) std::swap(mm.rows_[i - 1], mm.rows_[rng() % i]);
  }
  return mm;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Component {
  std::vector<std::uint32_t> columns;  // global indices, increasing
  std::vector<std::size_t> rows;
};

// Row echelon rank of one component with a dense accumulator of the component's width.
std::uint64_t component_rank(const Component& comp, const std::vector<MacaulayMatrix::Row>& rows, std::uint32_t p) {
  const std::size_t width = comp.columns.size();
  std::unordered_map<std::uint32_t, std::uint32_t> local;
  local.reserve(width);
  for (std::uint32_t i = 0; i < width; ++i) local.emplace(comp.columns[i], i);

  struct Pivot {
    std::vector<std::uint32_t> cols;
    std::vector<std::uint64_t> vals;
  };
  std::vector<int> pivot_at(width, -1);
  std::vector<Pivot> pivots;
  std::vector<std::uint64_t> acc(width, 0);

  for (std::size_t r : comp.rows) {
    const auto& row = rows[r];
    std::uint32_t start = static_cast<std::uint32_t>(width);
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      const std::uint32_t c = local.at(row.cols[k]);
      acc[c] = row.vals[k];
      start = std::min(start, c);
    }
    for (std::uint32_t c = start; c < width; ++c) {
      if (acc[c] == 0) continue;
      const int pv = pivot_at[c];
      if (pv < 0) {
        Pivot fresh;
        const std::uint64_t inv = Zp(static_cast<std::int64_t>(acc[c]), p).inverse().value();
        for (std::uint32_t cc = c; cc < width; ++cc) {
          if (acc[cc] == 0) continue;
          fresh.cols.push_back(cc);
          fresh.vals.push_back(acc[cc] * inv % p);
          acc[cc] = 0;
        }
        pivot_at[c] = static_cast<int>(pivots.size());
        pivots.push_back(std::move(fresh));
        break;
      }
      const std::uint64_t factor = p - acc[c];
      const auto& piv = pivots[static_cast<std::size_t>(pv)];
      for (std::size_t k = 0; k < piv.cols.size(); ++k) acc[piv.cols[k]] = (acc[piv.cols[k]] + factor * piv.vals[k]) % p;
    }
    std::fill(acc.begin() + start, acc.end(), 0);
  }
  return pivots.size();
}

}  // namespace

std::uint64_t MacaulayMatrix::rank(unsigned threads) const {
  if (rows_.empty()) return 0;
  DisjointSets sets(columns_.size());
  for (const auto& row : rows_)
    for (std::size_t k = 1; k < row.cols.size(); ++k) sets.unite(row.cols[0], row.cols[k]);

  std::unordered_map<std::uint32_t, std::size_t> slot;
  std::vector<Component> comps;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].cols.empty()) continue;
    const std::uint32_t root = sets.find(rows_[r].cols[0]);
    auto [it, inserted] = slot.emplace(root, comps.size());
    if (inserted) comps.emplace_back();
    comps[it->second].rows.push_back(r);
  }
  for (std::uint32_t c = 0; c < columns_.size(); ++c) {
    auto it = slot.find(sets.find(c));
    if (it != slot.end()) comps[it->second].columns.push_back(c);
  }

  std::vector<std::uint64_t> ranks(comps.size(), 0);
  const unsigned workers = std::min<std::size_t>(threads ? threads : default_thread_count(), comps.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < comps.size(); i = next++) ranks[i] = component_rank(comps[i], rows_, modulus_);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return std::accumulate(ranks.begin(), ranks.end(), std::uint64_t{0});
}

}  // namespace kalvar
