#pragma once

#include <cstdint>
#include <vector>

#include "qpascal/bigint.hpp"
#include "qpascal/errors.hpp"

namespace qpascal {

// Little-endian base-p digit expansion of a non-negative integer:
// digits[i] is the coefficient of p^i. The value 0 is represented as {0};
// otherwise there is no most-significant zero digit.
struct DigitVec {
  std::vector<std::uint32_t> digits;
  std::uint32_t base = 2;

  BigInt value() const;
  bool operator==(const DigitVec&) const = default;
};

// Carry bits produced when k and n-k are added in base p: carries[i] is 1
// exactly when digit i generates a carry, and count is their total.
struct CarrySequence {
  std::vector<std::uint8_t> carries;
  std::size_t count = 0;
};

bool is_prime(std::uint32_t p);

// Throws InvalidBase unless p is a prime >= 2.
void require_prime_base(std::uint32_t p);

// Base-p digits of n >= 0, least significant first.
DigitVec digits_base_p(const BigInt& n, std::uint32_t p);

// Exact binomial coefficient, with the convention binom(n, k) = 0 for k < 0
// or k > n. Computed by the multiplicative running product with exact
// division at each step, never through factorials.
BigInt binom_exact(const BigInt& n, const BigInt& k);

// binom(n, k) mod p, evaluated digitwise in base p without ever forming the
// full binomial coefficient.
std::uint32_t binom_mod_lucas(const BigInt& n, const BigInt& k, std::uint32_t p);

// True iff p divides binom(n, k), i.e. iff some base-p digit of k exceeds
// the corresponding digit of n.
bool is_binom_divisible(const BigInt& n, const BigInt& k, std::uint32_t p);

// Carry sequence of the base-p addition k + (n-k); its count equals
// nu_p(binom(n, k)). Requires 0 <= k <= n (throws DomainError otherwise).
CarrySequence kummer_carries(const BigInt& n, const BigInt& k, std::uint32_t p);

// Largest e such that p^e divides |x|. Throws ValuationOfZero for x = 0.
std::size_t nu_p(const BigInt& x, std::uint32_t p);

// nu_p(binom(n, k)) via the carry count, without big intermediates.
std::size_t nu_p_binom(const BigInt& n, const BigInt& k, std::uint32_t p);

}  // namespace qpascal
