#include "kalvar/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace kalvar {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(const BigInt& c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
  std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_t_pow(int k) {
  std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) v[static_cast<std::size_t>(j)] = (j % 2 ? -1 : 1) * binomial(k, j);
  return IntPoly(std::move(v));
}

BigInt IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(k), BigInt(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::divide_one_minus_t() const {
  if (value_at_one() != 0) throw std::domain_error("IntPoly: not divisible by (1 - t)");
  // p = (1 - t) q  =>  q_k = sum_{j <= k} p_j
  std::vector<BigInt> q(coeffs_.empty() ? 0 : coeffs_.size() - 1);
  BigInt run = 0;
  for (std::size_t k = 0; k < q.size(); ++k) {
    run += coeffs_[k];
    q[k] = run;
  }
  return IntPoly(std::move(q));
}

int IntPoly::order_at_one() const {
  if (is_zero()) throw std::domain_error("IntPoly: order at t = 1 of the zero polynomial");
  int order = 0;
  IntPoly p = *this;
  while (p.value_at_one() == 0) {
    p = p.divide_one_minus_t();
    ++order;
  }
  return order;
}

std::vector<BigInt> IntPoly::series_over_one_minus_t(int k, int terms) const {
  std::vector<BigInt> out(static_cast<std::size_t>(terms), BigInt(0));
  for (int e = 0; e < terms; ++e)
    for (int j = 0; j <= std::min(e, degree()); ++j)
      out[static_cast<std::size_t>(e)] += coeffs_[static_cast<std::size_t>(j)] * binomial(k - 1 + e - j, e - j);
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(v));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    BigInt c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt a = abs(c);
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << 't';
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

}  // namespace kalvar
