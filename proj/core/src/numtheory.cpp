#include "qpascal/numtheory.hpp"

#include "modarith.hpp"

namespace qpascal {

using detail::binom_digit_mod;

namespace {

void require_non_negative(const BigInt& v, const char* what) {
  if (sgn(v) < 0) throw DomainError(std::string(what) + " must be non-negative");
}

}  // namespace

BigInt DigitVec::value() const {
  BigInt v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v *= base;
    v += *it;
  }
  return v;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime_base(std::uint32_t p) {
  if (!is_prime(p)) {
    throw InvalidBase("base " + std::to_string(p) + " is not a prime >= 2");
  }
}

DigitVec digits_base_p(const BigInt& n, std::uint32_t p) {
  require_prime_base(p);
  require_non_negative(n, "digits_base_p: n");
  DigitVec d;
  d.base = p;
  BigInt rest = n;
  do {
    d.digits.push_back(static_cast<std::uint32_t>(
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p)));
  } while (sgn(rest) != 0);
  return d;
}

BigInt binom_exact(const BigInt& n, const BigInt& k) {
  require_non_negative(n, "binom_exact: n");
  if (sgn(k) < 0 || k > n) return 0;
  BigInt r = k;
  BigInt n_minus_k = n - k;
  if (n_minus_k < r) r = n_minus_k;
  if (!r.fits_ulong_p()) throw DomainError("binom_exact: result would be astronomically large");
  unsigned long steps = r.get_ui();
  BigInt acc = 1;
  BigInt factor = n;  // n - i + 1 at step i
  for (unsigned long i = 1; i <= steps; ++i) {
    acc *= factor;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
    factor -= 1;
  }
  return acc;
}

std::uint32_t binom_mod_lucas(const BigInt& n, const BigInt& k, std::uint32_t p) {
  require_prime_base(p);
  require_non_negative(n, "binom_mod_lucas: n");
  require_non_negative(k, "binom_mod_lucas: k");
  BigInt nn = n, kk = k;
  std::uint64_t acc = 1;
  while (sgn(nn) != 0 || sgn(kk) != 0) {
    auto nd = static_cast<std::uint32_t>(mpz_fdiv_q_ui(nn.get_mpz_t(), nn.get_mpz_t(), p));
    auto kd = static_cast<std::uint32_t>(mpz_fdiv_q_ui(kk.get_mpz_t(), kk.get_mpz_t(), p));
    if (kd > nd) return 0;
    acc = acc * binom_digit_mod(nd, kd, p) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

bool is_binom_divisible(const BigInt& n, const BigInt& k, std::uint32_t p) {
  require_prime_base(p);
  require_non_negative(n, "is_binom_divisible: n");
  require_non_negative(k, "is_binom_divisible: k");
  BigInt nn = n, kk = k;
  while (sgn(kk) != 0) {
    auto nd = mpz_fdiv_q_ui(nn.get_mpz_t(), nn.get_mpz_t(), p);
    auto kd = mpz_fdiv_q_ui(kk.get_mpz_t(), kk.get_mpz_t(), p);
    if (kd > nd) return true;
  }
  return false;
}

CarrySequence kummer_carries(const BigInt& n, const BigInt& k, std::uint32_t p) {
  require_prime_base(p);
  require_non_negative(k, "kummer_carries: k");
  if (k > n) throw DomainError("kummer_carries: requires k <= n");
  CarrySequence cs;
  BigInt nn = n, kk = k;
  std::uint8_t prev = 0;  // c_{-1} = 0
  do {
    auto nd = mpz_fdiv_q_ui(nn.get_mpz_t(), nn.get_mpz_t(), p);
    auto kd = mpz_fdiv_q_ui(kk.get_mpz_t(), kk.get_mpz_t(), p);
    std::uint8_t c = nd < kd ? 1 : nd > kd ? 0 : prev;
    cs.carries.push_back(c);
    cs.count += c;
    prev = c;
  } while (sgn(nn) != 0 || sgn(kk) != 0);
  return cs;
}

std::size_t nu_p(const BigInt& x, std::uint32_t p) {
  require_prime_base(p);
  if (sgn(x) == 0) throw ValuationOfZero();
  BigInt reduced;
  BigInt prime = p;
  return mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
}

std::size_t nu_p_binom(const BigInt& n, const BigInt& k, std::uint32_t p) {
  return kummer_carries(n, k, p).count;
}

}  // namespace qpascal
