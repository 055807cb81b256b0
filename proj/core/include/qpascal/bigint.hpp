#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace qpascal {

// Signed arbitrary-precision integer. All amplitudes, binomials and sums
// in this library are exact BigInt values; nothing is ever rounded.
using BigInt = mpz_class;

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Non-negative remainder of x mod m, also for negative x.
inline std::uint32_t mod_u32(const BigInt& x, std::uint32_t m) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(x.get_mpz_t(), m));
}

inline bool divisible_u32(const BigInt& x, std::uint32_t m) {
  return mpz_divisible_ui_p(x.get_mpz_t(), m) != 0;
}

}  // namespace qpascal
