#pragma once

// Symbolic matrices over A = K[x_ij], the reduced Kalman matrix
// (gamma; gamma alpha; ...; gamma alpha^{d-1}), its minors, and the
// trace-minor identity tr(⋀^i alpha) det(A) = sum_{|I| = i} det(A_I).

#include <string>
#include <vector>

#include "kalvar/check.hpp"
#include "kalvar/field.hpp"
#include "kalvar/poly.hpp"

namespace kalvar {

/// Block decomposition of an n×n matrix phi = [alpha beta; gamma delta] where the
/// first d basis vectors span L. Variables are row-major: x_ij has index i*n + j (0-based).
struct BlockLayout {
  enum class Block { Alpha, Beta, Gamma, Delta };

  int d = 1;
  int n = 2;

  int num_vars() const { return n * n; }
  int var(int row, int col) const { return row * n + col; }
  int alpha(int i, int j) const { return var(i, j); }        // d × d
  int beta(int i, int j) const { return var(i, d + j); }     // d × (n-d)
  int gamma(int i, int j) const { return var(d + i, j); }    // (n-d) × d
  int delta(int i, int j) const { return var(d + i, d + j); }  // (n-d) × (n-d)
  Block block_of(int var_index) const;
};

template <class C>
struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparsePoly<C>> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int nvars) : rows(r), cols(c), entries(static_cast<std::size_t>(r * c), SparsePoly<C>(nvars)) {}

  SparsePoly<C>& at(int r, int c) { return entries[static_cast<std::size_t>(r * cols + c)]; }
  const SparsePoly<C>& at(int r, int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
  int nvars() const { return entries.empty() ? 0 : entries.front().nvars(); }
};

template <class C>
PolyMatrix<C> operator*(const PolyMatrix<C>& a, const PolyMatrix<C>& b);

/// Generic symbolic matrix whose (i, j) entry is the variable first_var + i*grid_cols + j.
template <class Field>
PolyMatrix<typename Field::Elem> symbolic_matrix(int rows, int cols, int nvars, int first_var, int grid_cols, const Field& field);

/// d(n-d) × d; block r holds gamma alpha^r, homogeneous of degree r + 1.
/// Throws std::invalid_argument unless 1 <= d < n.
template <class Field>
PolyMatrix<typename Field::Elem> reduced_kalman_matrix(int d, int n, const Field& field);

/// Determinant of the submatrix on (rows, cols) by cofactor expansion along the sparsest row.
template <class C>
SparsePoly<C> minor(const PolyMatrix<C>& m, const std::vector<int>& rows, const std::vector<int>& cols);

template <class C>
SparsePoly<C> determinant(const PolyMatrix<C>& m);

template <class C>
struct IndexedMinor {
  std::vector<int> rows;  // row indices into the reduced Kalman matrix
  SparsePoly<C> poly;
};

/// All d×d minors with a_r rows from block r. Empty when some a_r > n - d.
/// Throws std::invalid_argument if the composition does not sum to d or has the wrong length.
template <class Field>
std::vector<IndexedMinor<typename Field::Elem>> enumerate_minors(int d, int n, const std::vector<int>& composition, const Field& field);

/// All d×d minors of the reduced Kalman matrix, grouped by composition.
template <class Field>
std::vector<IndexedMinor<typename Field::Elem>> all_maximal_minors(int d, int n, const Field& field);

/// Compositions a_0..a_{d-1} of d into d nonnegative parts, lexicographically descending.
std::vector<std::vector<int>> row_compositions(int d);

/// Sum of the principal i×i minors. Throws std::invalid_argument unless 1 <= i <= rows.
template <class C>
SparsePoly<C> wedge_trace(const PolyMatrix<C>& alpha, int i);

/// Generic A and alpha on disjoint variables: A uses x[1..d][*], alpha uses x[d+1..2d][*].
struct TraceIdentityInstance {
  int d = 0;
  PolyMatrix<Rational> a_mat;
  PolyMatrix<Rational> alpha;

  explicit TraceIdentityInstance(int d);
  int grid_cols() const { return d; }
  /// A with row j replaced by row j of A·alpha for each j in `subset`.
  PolyMatrix<Rational> replaced(const std::vector<int>& subset) const;
};

struct TraceIdentityResult {
  CheckResult check;
  SparsePoly<Rational> lhs;
  SparsePoly<Rational> rhs;
};

/// Expands both sides over Q and compares exactly; the failure detail carries the difference.
TraceIdentityResult trace_identity_check(int d, int i);

/// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace kalvar
