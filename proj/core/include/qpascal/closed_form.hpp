#pragma once

#include <cstdint>

#include "qpascal/bigint.hpp"
#include "qpascal/errors.hpp"
#include "qpascal/walk.hpp"

namespace qpascal {

// Cell of the amplitude triangle, addressable either as (row, col) with
// 0 <= col <= row or as carpet coordinates x = col, y = row - col.
struct CellCoord {
  std::uint64_t row = 0;
  std::uint64_t col = 0;

  static CellCoord from_rc(std::uint64_t row, std::uint64_t col);  // col <= row
  static CellCoord from_xy(std::uint64_t x, std::uint64_t y);

  std::uint64_t x() const { return col; }
  std::uint64_t y() const { return row - col; }

  // Walk coordinates of the down (blue) and up (red) component of this cell.
  std::uint64_t walk_time() const { return row + 1; }
  std::int64_t blue_position() const {
    return 2 * static_cast<std::int64_t>(col) - static_cast<std::int64_t>(row) - 1;
  }
  std::int64_t red_position() const {
    return 2 * static_cast<std::int64_t>(col) - static_cast<std::int64_t>(row) + 1;
  }

  bool operator==(const CellCoord&) const = default;
};

// f_m(x, y) = sum_{k=0}^{min(x,y)} binom(x,k) binom(y,k) (-m)^k.
// Symmetric in (x, y); any integer m is accepted, also negative ones.
// In hypergeometric terms this is 2F1(-x, -y; 1; -m).
BigInt f_m(std::int64_t m, std::uint64_t x, std::uint64_t y);

// f_m(x, y) mod p evaluated as the product of single-digit values
// f_m(x_i, y_i) mod p over the base-p digit pairs of x and y.
std::uint32_t f_m_mod_digitwise(std::int64_t m, const BigInt& x, const BigInt& y,
                                std::uint32_t p);

// Integer up/down coefficients of the scaled walk in closed form; for every
// coin and every (pos, t) these equal evolve(coin, t).up(pos) / .down(pos).
// Both return 0 off the reachable sublattice.
BigInt psi_up(const CoinParams& coin, std::int64_t pos, std::uint64_t t);
BigInt psi_down(const CoinParams& coin, std::int64_t pos, std::uint64_t t);

// Down (blue) and up (red) triangle entries of the m = 1, n = 1 walk:
//   h_blue(R, C) = psi_down(2C - R - 1, R + 1) = (-1)^(R-C) f_1(C, R-C)
//   h_red(R, C)  = psi_up(2C - R + 1, R + 1)
// Throw DomainError for C > R.
BigInt h_blue(std::uint64_t row, std::uint64_t col);
BigInt h_red(std::uint64_t row, std::uint64_t col);

// Phi(x, y) = (-1)^y f_1(x, y), the down coefficient in carpet coordinates.
BigInt phi(std::uint64_t x, std::uint64_t y);

// Scaled probability of the blue cell (x, y) for a general coin:
// m * n^(x+y+1) * f_m(x, y)^2, exact.
BigInt phi_general(const CoinParams& coin, std::uint64_t x, std::uint64_t y);

}  // namespace qpascal
