#pragma once

// Sparse multivariate polynomials over a generic coefficient field.
//
// Variables are indexed 0..nvars-1 and printed on a grid as x[i][j]
// (1-based, row-major, `grid_cols` variables per row). Terms are kept in
// graded reverse lexicographic order, largest first, with no zero coefficients.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kalvar/field.hpp"

namespace kalvar {

struct Monomial {
  std::vector<std::uint16_t> exps;

  Monomial() = default;
  explicit Monomial(int nvars) : exps(static_cast<std::size_t>(nvars), 0) {}

  int nvars() const { return static_cast<int>(exps.size()); }
  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] = static_cast<std::uint16_t>(r.exps[i] + o.exps[i]);
    return r;
  }
  bool operator==(const Monomial&) const = default;
};

/// Strict "a comes before b" in descending grevlex order.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = a.exps.size(); i-- > 0;)
      if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
    return false;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exps) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

/// All monomials of total degree `degree` in `nvars` variables, descending grevlex.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

template <class C>
class SparsePoly {
 public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C, GrevlexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(int nvars) : nvars_(nvars) {}

  static SparsePoly constant(int nvars, const C& c) {
    SparsePoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }
  static SparsePoly variable(int nvars, int index, const C& one) {
    if (index < 0 || index >= nvars) throw std::out_of_range("SparsePoly::variable: index out of range");
    Monomial m(nvars);
    m.exps[static_cast<std::size_t>(index)] = 1;
    SparsePoly p(nvars);
    p.add_term(m, one);
    return p;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree();
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("SparsePoly: monomial arity mismatch");
    if (kalvar::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (kalvar::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check(b);
    SparsePoly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  SparsePoly scaled(const C& k) const {
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * k);
    return r;
  }

  bool operator==(const SparsePoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Sum over terms of c * prod x_i^e_i at `point`; `zero` seeds the accumulator.
  C evaluate(std::span<const C> point, const C& zero) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw std::invalid_argument("SparsePoly::evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(nvars_));
    C total = zero;
    for (const auto& [m, c] : terms_) {
      C v = c;
      for (std::size_t i = 0; i < m.exps.size(); ++i)
        for (std::uint16_t e = 0; e < m.exps[i]; ++e) v = v * point[i];
      total = total + v;
    }
    return total;
  }

  /// `coef*x[i][j]^e*...` terms joined by `+`; "0" for the zero polynomial.
  std::string to_string(int grid_cols) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << '+';
      first = false;
      os << coeff_to_string(c);
      for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        os << "*x[" << i / static_cast<std::size_t>(grid_cols) + 1 << "][" << i % static_cast<std::size_t>(grid_cols) + 1 << ']';
        if (m.exps[i] > 1) os << '^' << m.exps[i];
      }
    }
    return os.str();
  }

 private:
  void check(const SparsePoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SparsePoly: variable count mismatch");
  }

  int nvars_ = 0;
  TermMap terms_;
};

/// Inverse of SparsePoly::to_string. Throws std::invalid_argument on malformed text.
template <class Field>
SparsePoly<typename Field::Elem> parse_poly(const std::string& text, int nvars, int grid_cols, const Field& field) {
  using P = SparsePoly<typename Field::Elem>;
  P out(nvars);
  if (text == "0") return out;

  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
      if (ch == sep) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto bad = [&](const std::string& why) { return std::invalid_argument("parse_poly: " + why + " in '" + text + "'"); };

  for (const auto& term : split(text, '+')) {
    auto factors = split(term, '*');
    if (factors.empty() || factors[0].empty()) throw bad("empty term");
    auto coeff = field.parse(factors[0]);
    Monomial m(nvars);
    for (std::size_t k = 1; k < factors.size(); ++k) {
      int i = 0, j = 0, e = 1;
      char tail = 0;
      std::istringstream is(factors[k]);
      char x, lb1, rb1, lb2, rb2;
      if (!(is >> x >> lb1 >> i >> rb1 >> lb2 >> j >> rb2) || x != 'x' || lb1 != '[' || rb1 != ']' || lb2 != '[' || rb2 != ']')
        throw bad("malformed variable '" + factors[k] + "'");
      if (is >> tail) {
        if (tail != '^' || !(is >> e) || e < 1) throw bad("malformed exponent '" + factors[k] + "'");
      }
      const int index = (i - 1) * grid_cols + (j - 1);
      if (i < 1 || j < 1 || j > grid_cols || index >= nvars) throw bad("variable out of range '" + factors[k] + "'");
      m.exps[static_cast<std::size_t>(index)] = static_cast<std::uint16_t>(m.exps[static_cast<std::size_t>(index)] + e);
    }
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace kalvar
