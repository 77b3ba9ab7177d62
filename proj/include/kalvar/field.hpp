#pragma once

// Coefficient domains for SparsePoly: exact rationals and prime fields.
// Both expose the same frozen surface: +, -, *, unary -, inverse(), is_zero().

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kalvar/bigint.hpp"

namespace kalvar {

/// Element of Z/pZ carrying its modulus. p < 2^32.
class Zp {
 public:
  Zp() = default;
  Zp(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("Zp: modulus must be at least 2");
    std::int64_t r = v % static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Zp operator+(Zp a, Zp b) {
    a.check(b);
    std::uint64_t s = std::uint64_t{a.v_} + b.v_;
    return raw(static_cast<std::uint32_t>(s >= a.p_ ? s - a.p_ : s), a.p_);
  }
  friend Zp operator-(Zp a, Zp b) {
    a.check(b);
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + (a.p_ - b.v_), a.p_);
  }
  friend Zp operator*(Zp a, Zp b) {
    a.check(b);
    return raw(static_cast<std::uint32_t>(std::uint64_t{a.v_} * b.v_ % a.p_), a.p_);
  }
  Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }

  /// Multiplicative inverse (Fermat); throws std::domain_error on zero.
  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("Zp: inverse of zero");
    Zp base = *this, acc = raw(1, p_);
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

  bool operator==(const Zp& o) const { return v_ == o.v_ && p_ == o.p_; }
  std::string to_string() const { return std::to_string(v_); }

 private:
  static Zp raw(std::uint32_t v, std::uint32_t p) {
    Zp z;
    z.v_ = v;
    z.p_ = p;
    return z;
  }
  void check(const Zp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("Zp: mixing moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Zp& x) { return x.is_zero(); }
inline Zp inverse(const Zp& x) { return x.inverse(); }
inline std::string coeff_to_string(const Zp& x) { return x.to_string(); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x) {
  if (sgn(x) == 0) throw std::domain_error("Rational: inverse of zero");
  return Rational(1) / x;
}
inline std::string coeff_to_string(const Rational& x) { return x.get_str(); }

/// Field descriptors used to materialize constants in generic code.
struct RationalField {
  using Elem = Rational;
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }
  /// Parses "3" or "-3/4".
  Elem parse(const std::string& text) const {
    Elem r(text);
    r.canonicalize();
    return r;
  }
};

struct PrimeField {
  using Elem = Zp;
  std::uint32_t modulus = 32003;
  Elem from_int(std::int64_t v) const { return Zp(v, modulus); }
  Elem parse(const std::string& text) const { return Zp(std::stoll(text), modulus); }
};

/// Trial division; moduli here are below 2^32.
inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace kalvar
