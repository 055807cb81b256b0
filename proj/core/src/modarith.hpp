#pragma once

#include <cstdint>

// Small modular helpers shared by the digitwise evaluators. 32-bit moduli;
// all intermediate products fit in 64 bits.
namespace qpascal::detail {

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod_prime(std::uint64_t a, std::uint32_t p) {
  return pow_mod(a, p - 2, p);
}

// binom(n, k) mod p for n, k < p.
inline std::uint32_t binom_digit_mod(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t j = 1; j <= k; ++j) {
    num = num * ((n - j + 1) % p) % p;
    den = den * (j % p) % p;
  }
  return static_cast<std::uint32_t>(num * inv_mod_prime(den, p) % p);
}

}  // namespace qpascal::detail
