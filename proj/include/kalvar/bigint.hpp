#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kalvar {

/// Arbitrary precision integers and rationals (GMP).
using BigInt = mpz_class;
using Rational = mpq_class;

/// binomial(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  BigInt r;
  if (n < 0 || k < 0 || k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || !x.fits_ulong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return x.get_ui();
}

}  // namespace kalvar
