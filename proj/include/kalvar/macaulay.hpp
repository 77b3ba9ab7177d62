#pragma once

// Degree-e Macaulay matrices over Z/pZ: one row per (generator, cofactor monomial),
// columns are the degree-e monomials in descending grevlex order. The rank is the
// dimension of the degree-e piece of the ideal generated by the rows' generators.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "kalvar/field.hpp"
#include "kalvar/poly.hpp"

namespace kalvar {

struct MacaulayOptions {
  std::uint64_t column_cap = 1'000'000;
  /// When set, rows are permuted with this seed before elimination.
  std::optional<std::uint64_t> shuffle_seed;
  /// 0 means: KALVAR_THREADS if set, else hardware concurrency.
  unsigned threads = 0;
};

class MacaulayCapExceeded : public std::runtime_error {
 public:
  MacaulayCapExceeded(std::uint64_t required, std::uint64_t cap);
  std::uint64_t required() const { return required_; }

 private:
  std::uint64_t required_;
};

/// Worker count from KALVAR_THREADS, falling back to hardware concurrency.
unsigned default_thread_count();

class MacaulayMatrix {
 public:
  struct Row {
    std::vector<std::uint32_t> cols;  // strictly increasing
    std::vector<std::uint32_t> vals;  // nonzero residues
  };

  /// Generators of degree > `degree` are skipped; zero generators contribute nothing.
  /// Throws std::invalid_argument on non-homogeneous generators or mixed moduli,
  /// MacaulayCapExceeded when the column count exceeds the cap.
  static MacaulayMatrix build(std::span<const SparsePoly<Zp>> generators, int degree, std::uint32_t modulus,
                              const MacaulayOptions& options = {});

  int degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::size_t num_columns() const { return columns_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  const std::vector<Monomial>& columns() const { return columns_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// Rank over Z/pZ. The matrix splits into connected row/column components which are
  /// eliminated independently (in parallel) and summed in a fixed order.
  std::uint64_t rank(unsigned threads = 0) const;

 private:
  int degree_ = 0;
  std::uint32_t modulus_ = 2;
  std::vector<Monomial> columns_;
  std::vector<Row> rows_;
};

/// Number of monomials of degree e in n variables.
std::uint64_t monomial_count(int nvars, int degree);

}  // namespace kalvar
