#include "kalvar/kalman_matrix.hpp"

#include <algorithm>
#include <functional>

namespace kalvar {

BlockLayout::Block BlockLayout::block_of(int var_index) const {
  const int row = var_index / n, col = var_index % n;
  if (row < d) return col < d ? Block::Alpha : Block::Beta;
  return col < d ? Block::Gamma : Block::Delta;
}

template <class C>
PolyMatrix<C> operator*(const PolyMatrix<C>& a, const PolyMatrix<C>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("PolyMatrix product: shape mismatch");
  PolyMatrix<C> r(a.rows, b.cols, a.nvars());
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      for (int k = 0; k < a.cols; ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
  return r;
}

template <class Field>
PolyMatrix<typename Field::Elem> symbolic_matrix(int rows, int cols, int nvars, int first_var, int grid_cols, const Field& field) {
  PolyMatrix<typename Field::Elem> m(rows, cols, nvars);
  const auto one = field.from_int(1);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = SparsePoly<typename Field::Elem>::variable(nvars, first_var + i * grid_cols + j, one);
  return m;
}

template <class Field>
PolyMatrix<typename Field::Elem> reduced_kalman_matrix(int d, int n, const Field& field) {
  if (!(1 <= d && d < n)) throw std::invalid_argument("reduced_kalman_matrix: need 1 <= d < n");
  using C = typename Field::Elem;
  const BlockLayout layout{d, n};
  const int w = n - d, nvars = layout.num_vars();
  const auto one = field.from_int(1);

  PolyMatrix<C> alpha(d, d, nvars), block(w, d, nvars);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) alpha.at(i, j) = SparsePoly<C>::variable(nvars, layout.alpha(i, j), one);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < d; ++j) block.at(i, j) = SparsePoly<C>::variable(nvars, layout.gamma(i, j), one);

  PolyMatrix<C> out(d * w, d, nvars);
  for (int r = 0; r < d; ++r) {
    if (r > 0) block = block * alpha;
    for (int i = 0; i < w; ++i)
      for (int j = 0; j < d; ++j) out.at(r * w + i, j) = block.at(i, j);
  }
  return out;
}

namespace {

template <class C>
SparsePoly<C> cofactor_det(const PolyMatrix<C>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() == 1) return m.at(rows[0], cols[0]);

  std::size_t pivot = 0, best = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t zeros = 0;
    for (int c : cols) zeros += m.at(rows[r], c).is_zero() ? 1 : 0;
    if (r == 0 || zeros > best) {
      best = zeros;
      pivot = r;
    }
  }

  std::vector<int> sub_rows(rows);
  sub_rows.erase(sub_rows.begin() + static_cast<std::ptrdiff_t>(pivot));
  SparsePoly<C> total(m.nvars());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& entry = m.at(rows[pivot], cols[k]);
    if (entry.is_zero()) continue;
    std::vector<int> sub_cols(cols);
    sub_cols.erase(sub_cols.begin() + static_cast<std::ptrdiff_t>(k));
    auto term = entry * cofactor_det(m, sub_rows, sub_cols);
    if ((pivot + k) % 2) total -= term;
    else total += term;
  }
  return total;
}

}  // namespace

template <class C>
SparsePoly<C> minor(const PolyMatrix<C>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column index sets differ in size");
  if (rows.empty()) throw std::invalid_argument("minor: empty index set");
  for (int r : rows)
    if (r < 0 || r >= m.rows) throw std::out_of_range("minor: row index out of range");
  for (int c : cols)
    if (c < 0 || c >= m.cols) throw std::out_of_range("minor: column index out of range");
  return cofactor_det(m, rows, cols);
}

template <class C>
SparsePoly<C> determinant(const PolyMatrix<C>& m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant: matrix is not square");
  std::vector<int> idx(static_cast<std::size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) idx[static_cast<std::size_t>(i)] = i;
  return minor(m, idx, idx);
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<int>> row_compositions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(cur.size()) == d - 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  if (d >= 1) rec(d);
  return out;
}

template <class Field>
std::vector<IndexedMinor<typename Field::Elem>> enumerate_minors(int d, int n, const std::vector<int>& composition, const Field& field) {
  if (static_cast<int>(composition.size()) != d) throw std::invalid_argument("enumerate_minors: composition must have d parts");
  int sum = 0;
  for (int a : composition) {
    if (a < 0) throw std::invalid_argument("enumerate_minors: negative composition part");
    sum += a;
  }
  if (sum != d) throw std::invalid_argument("enumerate_minors: composition must sum to d");

  std::vector<IndexedMinor<typename Field::Elem>> out;
  const int w = n - d;
  for (int a : composition)
    if (a > w) return out;

  const auto kalman = reduced_kalman_matrix(d, n, field);
  std::vector<std::vector<std::vector<int>>> choices;
  for (int a : composition) choices.push_back(subsets_of_size(w, a));

  std::vector<int> cols(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) cols[static_cast<std::size_t>(j)] = j;

  std::vector<int> rows;
  std::function<void(int)> rec = [&](int block) {
    if (block == d) {
      out.push_back({rows, minor(kalman, rows, cols)});
      return;
    }
    for (const auto& pick : choices[static_cast<std::size_t>(block)]) {
      for (int k : pick) rows.push_back(block * w + k);
      rec(block + 1);
      rows.resize(rows.size() - pick.size());
    }
  };
  rec(0);
  return out;
}

template <class Field>
std::vector<IndexedMinor<typename Field::Elem>> all_maximal_minors(int d, int n, const Field& field) {
  std::vector<IndexedMinor<typename Field::Elem>> out;
  for (const auto& comp : row_compositions(d)) {
    auto part = enumerate_minors(d, n, comp, field);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

template <class C>
SparsePoly<C> wedge_trace(const PolyMatrix<C>& alpha, int i) {
  if (alpha.rows != alpha.cols) throw std::invalid_argument("wedge_trace: matrix is not square");
  if (i < 1 || i > alpha.rows) throw std::invalid_argument("wedge_trace: need 1 <= i <= d");
  SparsePoly<C> total(alpha.nvars());
  for (const auto& subset : subsets_of_size(alpha.rows, i)) total += minor(alpha, subset, subset);
  return total;
}

TraceIdentityInstance::TraceIdentityInstance(int d_) : d(d_) {
  if (d < 1) throw std::invalid_argument("TraceIdentityInstance: d must be positive");
  const int nvars = 2 * d * d;
  a_mat = symbolic_matrix(d, d, nvars, 0, d, RationalField{});
  alpha = symbolic_matrix(d, d, nvars, d * d, d, RationalField{});
}

PolyMatrix<Rational> TraceIdentityInstance::replaced(const std::vector<int>& subset) const {
  const auto product = a_mat * alpha;
  PolyMatrix<Rational> out = a_mat;
  for (int j : subset)
    for (int c = 0; c < d; ++c) out.at(j, c) = product.at(j, c);
  return out;
}

TraceIdentityResult trace_identity_check(int d, int i) {
  if (i < 1 || i > d) throw std::invalid_argument("trace_identity_check: need 1 <= i <= d");
  TraceIdentityInstance inst(d);
  TraceIdentityResult r;
  r.check.name = "trace-identity d=" + std::to_string(d) + " i=" + std::to_string(i);
  r.lhs = wedge_trace(inst.alpha, i) * determinant(inst.a_mat);
  r.rhs = SparsePoly<Rational>(2 * d * d);
  for (const auto& subset : subsets_of_size(d, i)) r.rhs += determinant(inst.replaced(subset));
  if (!(r.lhs == r.rhs)) r.check.fail("lhs - rhs = " + (r.lhs - r.rhs).to_string(inst.grid_cols()));
  return r;
}

#define KALVAR_INSTANTIATE(FIELD)                                                                                    \
  template PolyMatrix<FIELD::Elem> operator*(const PolyMatrix<FIELD::Elem>&, const PolyMatrix<FIELD::Elem>&);        \
  template PolyMatrix<FIELD::Elem> symbolic_matrix(int, int, int, int, int, const FIELD&);                           \
  template PolyMatrix<FIELD::Elem> reduced_kalman_matrix(int, int, const FIELD&);                                    \
  template SparsePoly<FIELD::Elem> minor(const PolyMatrix<FIELD::Elem>&, const std::vector<int>&, const std::vector<int>&); \
  template SparsePoly<FIELD::Elem> determinant(const PolyMatrix<FIELD::Elem>&);                                      \
  template std::vector<IndexedMinor<FIELD::Elem>> enumerate_minors(int, int, const std::vector<int>&, const FIELD&);  \
  template std::vector<IndexedMinor<FIELD::Elem>> all_maximal_minors(int, int, const FIELD&);                         \
  template SparsePoly<FIELD::Elem> wedge_trace(const PolyMatrix<FIELD::Elem>&, int);

KALVAR_INSTANTIATE(RationalField)
KALVAR_INSTANTIATE(PrimeField)

#undef KALVAR_INSTANTIATE

}  // namespace kalvar
