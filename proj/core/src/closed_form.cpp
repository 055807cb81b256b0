#include "qpascal/closed_form.hpp"

#include <algorithm>

#include "modarith.hpp"
#include "qpascal/numtheory.hpp"

namespace qpascal {

namespace {

// sum_{k>=1} binom(hp, k) binom(hm-1, k-1) (-m)^k, via the ratio recurrence
// binom(n, k+1) = binom(n, k) (n-k) / (k+1) with exact division.
BigInt up_sum(std::uint64_t hp, std::uint64_t hm, std::uint32_t m) {
  const std::uint64_t kmax = std::min(hp, hm);
  BigInt sum = 0;
  BigInt b1 = hp;  // binom(hp, 1)
  BigInt b2 = 1;   // binom(hm-1, 0)
  BigInt pw = -static_cast<long>(m);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    sum += b1 * b2 * pw;
    if (k == kmax) break;
    b1 *= hp - k;
    mpz_divexact_ui(b1.get_mpz_t(), b1.get_mpz_t(), k + 1);
    b2 *= hm - k;
    mpz_divexact_ui(b2.get_mpz_t(), b2.get_mpz_t(), k);
    pw *= -static_cast<long>(m);
  }
  return sum;
}

// sum_{k>=0} binom(hp, k) binom(hm-1, k) (-m)^k; requires hm >= 1.
BigInt down_sum(std::uint64_t hp, std::uint64_t hm, std::uint32_t m) {
  const std::uint64_t kmax = std::min(hp, hm - 1);
  BigInt sum = 0;
  BigInt b1 = 1, b2 = 1, pw = 1;
  for (std::uint64_t k = 0; k <= kmax; ++k) {
    sum += b1 * b2 * pw;
    if (k == kmax) break;
    b1 *= hp - k;
    mpz_divexact_ui(b1.get_mpz_t(), b1.get_mpz_t(), k + 1);
    b2 *= hm - 1 - k;
    mpz_divexact_ui(b2.get_mpz_t(), b2.get_mpz_t(), k + 1);
    pw *= -static_cast<long>(m);
  }
  return sum;
}

// f_m(a, b) mod p for single digits a, b < p.
std::uint32_t f_digit_mod(std::int64_t m, std::uint32_t a, std::uint32_t b,
                          std::uint32_t p) {
  const std::uint32_t kmax = std::min(a, b);
  std::int64_t mr = m % static_cast<std::int64_t>(p);
  std::uint32_t m_mod = static_cast<std::uint32_t>(mr < 0 ? mr + p : mr);
  const std::uint64_t neg_m = (p - m_mod) % p;
  std::uint64_t sum = 1 % p, c1 = 1, c2 = 1, pw = 1;
  for (std::uint32_t k = 1; k <= kmax; ++k) {
    const std::uint64_t inv = detail::inv_mod_prime(k, p);
    c1 = c1 * ((a - k + 1) % p) % p * inv % p;
    c2 = c2 * ((b - k + 1) % p) % p * inv % p;
    pw = pw * neg_m % p;
    sum = (sum + c1 * c2 % p * pw) % p;
  }
  return static_cast<std::uint32_t>(sum);
}

bool off_lattice(std::int64_t pos, std::uint64_t t) {
  auto st = static_cast<std::int64_t>(t);
  return pos < -st || pos > st || (st + pos) % 2 != 0;
}

}  // namespace

CellCoord CellCoord::from_rc(std::uint64_t row, std::uint64_t col) {
  if (col > row) throw DomainError("cell column exceeds row");
  return CellCoord{row, col};
}

CellCoord CellCoord::from_xy(std::uint64_t x, std::uint64_t y) {
  return CellCoord{x + y, x};
}

BigInt f_m(std::int64_t m, std::uint64_t x, std::uint64_t y) {
  const std::uint64_t kmax = std::min(x, y);
  BigInt sum = 1;  // k = 0 term
  BigInt b1 = 1, b2 = 1, pw = 1;
  const BigInt neg_m = -BigInt(static_cast<long>(m));
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    b1 *= x - k + 1;
    mpz_divexact_ui(b1.get_mpz_t(), b1.get_mpz_t(), k);
    b2 *= y - k + 1;
    mpz_divexact_ui(b2.get_mpz_t(), b2.get_mpz_t(), k);
    pw *= neg_m;
    sum += b1 * b2 * pw;
  }
  return sum;
}

std::uint32_t f_m_mod_digitwise(std::int64_t m, const BigInt& x, const BigInt& y,
                                std::uint32_t p) {
  require_prime_base(p);
  if (sgn(x) < 0 || sgn(y) < 0) throw DomainError("f_m_mod_digitwise: x, y must be non-negative");
  BigInt xx = x, yy = y;
  std::uint64_t acc = 1 % p;
  while (sgn(xx) != 0 || sgn(yy) != 0) {
    auto xd = static_cast<std::uint32_t>(mpz_fdiv_q_ui(xx.get_mpz_t(), xx.get_mpz_t(), p));
    auto yd = static_cast<std::uint32_t>(mpz_fdiv_q_ui(yy.get_mpz_t(), yy.get_mpz_t(), p));
    acc = acc * f_digit_mod(m, xd, yd, p) % p;
    if (acc == 0) break;
  }
  return static_cast<std::uint32_t>(acc);
}

BigInt psi_up(const CoinParams& coin, std::int64_t pos, std::uint64_t t) {
  validate_coin(coin);
  if (off_lattice(pos, t)) return 0;
  if (pos == static_cast<std::int64_t>(t)) return 1;
  const auto hp = static_cast<std::uint64_t>((static_cast<std::int64_t>(t) + pos) / 2);
  const auto hm = static_cast<std::uint64_t>((static_cast<std::int64_t>(t) - pos) / 2);
  BigInt val = up_sum(hp, hm, coin.m);
  return hm % 2 == 0 ? val : BigInt(-val);
}

BigInt psi_down(const CoinParams& coin, std::int64_t pos, std::uint64_t t) {
  validate_coin(coin);
  if (off_lattice(pos, t)) return 0;
  if (pos == static_cast<std::int64_t>(t)) return 0;
  const auto hp = static_cast<std::uint64_t>((static_cast<std::int64_t>(t) + pos) / 2);
  const auto hm = static_cast<std::uint64_t>((static_cast<std::int64_t>(t) - pos) / 2);
  BigInt val = down_sum(hp, hm, coin.m);
  return hm % 2 == 1 ? val : BigInt(-val);
}

BigInt h_blue(std::uint64_t row, std::uint64_t col) {
  if (col > row) throw DomainError("h_blue: requires col <= row");
  BigInt val = f_m(1, col, row - col);
  return (row - col) % 2 == 0 ? val : BigInt(-val);
}

BigInt h_red(std::uint64_t row, std::uint64_t col) {
  if (col > row) throw DomainError("h_red: requires col <= row");
  if (col == row) return 1;
  BigInt val = up_sum(col + 1, row - col, 1);
  return (row - col) % 2 == 0 ? val : BigInt(-val);
}

BigInt phi(std::uint64_t x, std::uint64_t y) {
  BigInt val = f_m(1, x, y);
  return y % 2 == 0 ? val : BigInt(-val);
}

BigInt phi_general(const CoinParams& coin, std::uint64_t x, std::uint64_t y) {
  validate_coin(coin);
  BigInt fm = f_m(coin.m, x, y);
  return coin.m * pow_ui(BigInt(coin.n), x + y + 1) * fm * fm;
}

}  // namespace qpascal
