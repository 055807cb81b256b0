#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qpascal/bigint.hpp"
#include "qpascal/errors.hpp"

namespace qpascal {

// Integer coin family: the walk step applies the scaled coin
//
//   sqrt(n) * |  1        sqrt(m) |
//             |  sqrt(m)  -1      |
//
// m = 1, n = 1 is the scaled Hadamard coin. m = 0 is allowed and degenerate
// (the walker never turns).
struct CoinParams {
  std::uint32_t m = 1;
  std::uint32_t n = 1;
};

void validate_coin(const CoinParams& coin);  // throws DomainError if n < 1

// State of the scaled walk after t steps from |0,up>, stored as pure integer
// coefficient arrays over the even sublattice: index k = (pos + t) / 2,
// 0 <= k <= t, position pos = 2k - t.
//
// Decoding back to amplitudes of the unscaled walk:
//   up amplitude at pos   = up(pos)            * sqrt(n)^t / sqrt(n(1+m))^t
//   down amplitude at pos = down(pos) * sqrt(m) * sqrt(n)^t / sqrt(n(1+m))^t
// The radical factors sqrt(m) and sqrt(n)^t are bookkeeping only and are
// never materialized; squaring for probabilities reintroduces m and n as
// exact integers.
class WalkState {
 public:
  explicit WalkState(CoinParams coin)
      : coin_(coin), up_(1, BigInt(1)), down_(1, BigInt(0)) {
    validate_coin(coin);
  }

  std::uint64_t time() const { return t_; }
  const CoinParams& coin() const { return coin_; }

  std::size_t support_size() const { return up_.size(); }  // t + 1
  std::int64_t position_of_index(std::size_t k) const {
    return 2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(t_);
  }

  // True when pos lies on the reachable sublattice: |pos| <= t, t + pos even.
  bool on_support(std::int64_t pos) const;

  const BigInt& up_coeff(std::size_t k) const { return up_[k]; }
  const BigInt& down_coeff(std::size_t k) const { return down_[k]; }

  // Coefficients by position; zero off the support.
  BigInt up(std::int64_t pos) const;
  BigInt down(std::int64_t pos) const;

 private:
  WalkState(CoinParams coin, std::uint64_t t, std::vector<BigInt> up,
            std::vector<BigInt> down)
      : coin_(coin), t_(t), up_(std::move(up)), down_(std::move(down)) {}

  friend WalkState step(const WalkState& s);

  CoinParams coin_;
  std::uint64_t t_ = 0;
  std::vector<BigInt> up_;
  std::vector<BigInt> down_;
};

// t = 0 state |0,up>: up(0) = 1, everything else 0.
WalkState initial_state(CoinParams coin);

// One application of coin-then-shift in integer form:
//   up'(pos)   = up(pos-1) + m * down(pos-1)
//   down'(pos) = up(pos+1) - down(pos+1)
WalkState step(const WalkState& s);

// t-fold composition of step on initial_state(coin).
WalkState evolve(CoinParams coin, std::uint64_t t);

// Probability numerator up(pos)^2 + m * down(pos)^2. The probability of
// measuring the walker at pos is this value divided by (1+m)^t.
BigInt scaled_probability(const WalkState& s, std::int64_t pos);

// Sum of scaled_probability over the support; equals (1+m)^t exactly.
BigInt scaled_norm(const WalkState& s);

// Row dump, one line per support position in ascending order:
// "pos<TAB>a<TAB>b\n" with exact decimal integers.
void dump_row(const WalkState& s, std::ostream& out);

}  // namespace qpascal
