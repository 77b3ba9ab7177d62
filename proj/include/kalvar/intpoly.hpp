#pragma once

#include <string>
#include <vector>

#include "kalvar/bigint.hpp"

namespace kalvar {

/// Dense univariate polynomial in t with exact integer coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(const BigInt& c, int exponent);
  /// (1 - t)^k
  static IntPoly one_minus_t_pow(int k);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt value_at_one() const;
  /// Multiplication by t^k.
  IntPoly shifted(int k) const;
  /// Exact division by (1 - t); throws std::domain_error if p(1) != 0.
  IntPoly divide_one_minus_t() const;
  /// Order of vanishing at t = 1; throws std::domain_error on the zero polynomial.
  int order_at_one() const;

  /// First `terms` coefficients of p(t) / (1 - t)^k.
  std::vector<BigInt> series_over_one_minus_t(int k, int terms) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly&) const = default;

  /// e.g. "1 - 3*t^2 + 2*t^3"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace kalvar
