#pragma once

// Partition combinatorics: enumeration in a box, conjugation, and exact
// dimensions of Schur and skew Schur functors.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kalvar/bigint.hpp"

namespace kalvar {

/// The constraint lambda ⊆ rows × cols: at most `rows` parts, each at most `cols`.
struct BoxConstraint {
  int rows = 0;
  int cols = 0;
};

/// Weakly decreasing sequence of nonnegative integers, trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing entries. Zeros are trimmed.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  /// i-th part, 0-indexed, zero beyond the length.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// True if `inner` ⊆ *this componentwise.
  bool contains(const Partition& inner) const;
  bool fits(BoxConstraint box) const { return length() <= box.rows && first() <= box.cols; }

  /// Parts padded with zeros to `len` (len must be >= length()).
  std::vector<int> padded(int len) const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// outer/inner with inner ⊆ outer.
struct SkewShape {
  Partition outer;
  Partition inner;

  SkewShape() = default;
  /// Throws std::invalid_argument if inner is not contained in outer.
  SkewShape(Partition outer_, Partition inner_ = {});

  int size() const { return outer.size() - inner.size(); }
  std::string to_string() const;
  bool operator==(const SkewShape&) const = default;
};

/// lambda^T_i = #{ j : lambda_j >= i }.
Partition conjugate(const Partition& lambda);

struct PartitionFilter {
  std::optional<int> exact_size;
  std::optional<int> exact_length;
};

/// All partitions in the box, ordered by size then lexicographically descending.
std::vector<Partition> partitions_in_box(BoxConstraint box, PartitionFilter filter = {});

/// Weyl dimension of the irreducible GL(m) representation with weakly decreasing
/// highest weight eta (entries may be negative). For a partition with more than m
/// nonzero parts the answer is 0. Throws std::invalid_argument for non-decreasing
/// input, or a sequence longer than m that is not a partition.
BigInt schur_dim(std::span<const int> eta, int m);
BigInt schur_dim(const Partition& lambda, int m);

/// Number of semistandard skew tableaux of the shape with entries in {1..m}.
BigInt skew_schur_dim(const SkewShape& shape, int m);

/// A horizontal strip has at most one box in each column.
bool is_horizontal_strip(const SkewShape& shape);

struct CauchyTerm {
  Partition lambda;
  Partition lambda_t;
};

/// Summands S_lambda E ⊗ S_{lambda^T} F of ⋀^p (E ⊗ F).
std::vector<CauchyTerm> cauchy_terms(int p, int dim_e, int dim_f);

/// (lambda_1 - 1, ..., lambda_s - 1). Requires l(lambda) == s with every part positive.
Partition tilde_shift(const Partition& lambda, int s);

}  // namespace kalvar
