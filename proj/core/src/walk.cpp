#include "qpascal/walk.hpp"

#include <ostream>

namespace qpascal {

void validate_coin(const CoinParams& coin) {
  if (coin.n < 1) throw DomainError("coin scale n must be >= 1");
}

bool WalkState::on_support(std::int64_t pos) const {
  auto t = static_cast<std::int64_t>(t_);
  return pos >= -t && pos <= t && (t + pos) % 2 == 0;
}

BigInt WalkState::up(std::int64_t pos) const {
  if (!on_support(pos)) return 0;
  return up_[static_cast<std::size_t>((pos + static_cast<std::int64_t>(t_)) / 2)];
}

BigInt WalkState::down(std::int64_t pos) const {
  if (!on_support(pos)) return 0;
  return down_[static_cast<std::size_t>((pos + static_cast<std::int64_t>(t_)) / 2)];
}

WalkState initial_state(CoinParams coin) { return WalkState(coin); }

WalkState step(const WalkState& s) {
  const std::size_t old_len = s.up_.size();  // t + 1
  std::vector<BigInt> up(old_len + 1);
  std::vector<BigInt> down(old_len + 1);
  // Index k of the new state addresses position 2k - (t+1); its up input
  // sits at old index k-1, its down input at old index k.
  for (std::size_t k = 0; k <= old_len; ++k) {
    if (k >= 1) {
      up[k] = s.up_[k - 1] + s.coin_.m * s.down_[k - 1];
    }
    if (k < old_len) {
      down[k] = s.up_[k] - s.down_[k];
    }
  }
  return WalkState(s.coin_, s.t_ + 1, std::move(up), std::move(down));
}

WalkState evolve(CoinParams coin, std::uint64_t t) {
  WalkState s = initial_state(coin);
  for (std::uint64_t i = 0; i < t; ++i) s = step(s);
  return s;
}

BigInt scaled_probability(const WalkState& s, std::int64_t pos) {
  if (!s.on_support(pos)) return 0;
  auto k = static_cast<std::size_t>((pos + static_cast<std::int64_t>(s.time())) / 2);
  const BigInt& a = s.up_coeff(k);
  const BigInt& b = s.down_coeff(k);
  return a * a + s.coin().m * b * b;
}

BigInt scaled_norm(const WalkState& s) {
  BigInt total = 0;
  for (std::size_t k = 0; k < s.support_size(); ++k) {
    const BigInt& a = s.up_coeff(k);
    const BigInt& b = s.down_coeff(k);
    total += a * a + s.coin().m * b * b;
  }
  return total;
}

void dump_row(const WalkState& s, std::ostream& out) {
  for (std::size_t k = 0; k < s.support_size(); ++k) {
    out << s.position_of_index(k) << '\t' << s.up_coeff(k).get_str() << '\t'
        << s.down_coeff(k).get_str() << '\n';
  }
}

}  // namespace qpascal
