#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qpascal/bigint.hpp"

namespace qpascal {

// A computed integer sequence together with the linear recurrence it is
// expected to satisfy: values[i] = sum_j recurrence[j] * values[i-1-j] for
// all i >= recurrence.size().
struct SeqRecord {
  std::string name;
  std::vector<BigInt> values;
  std::vector<std::int64_t> recurrence;
};

// True when every index >= recurrence order satisfies the recurrence.
bool satisfies_recurrence(const SeqRecord& seq);

// Sum of all up and down coefficients per row of the m = 1, n = 1 walk,
// t = 0..t_max. Equals 2^(t/2) for even t and 2^((t+1)/2) for odd t.
SeqRecord row_amplitude_sums(std::uint64_t t_max);

// Shallow diagonals d_n = sum_c binom(n-c, c) of Pascal's triangle,
// n = 0..n_max; the Fibonacci numbers F_{n+1}.
SeqRecord shallow_diagonals_pascal(std::uint64_t n_max);

enum class DiagonalDirection { AUp, BDown };
enum class TriangleColor { Red, Blue };

// Diagonal sums of the up/down amplitude triangles,
//   A_n = sum_c H(n-c, c)        (direction AUp)
//   B_n = sum_c H(n-c, n-2c)     (direction BDown)
// with H = h_red or h_blue and terms outside 0 <= C <= R skipped. The A
// family satisfies A_n = -A_{n-1} + A_{n-2} + 2 A_{n-3} and the B family
// B_n = B_{n-1} - B_{n-2} + 2 B_{n-3}; initial terms are computed from the
// definitions, never hardcoded. Requires n_max >= 3.
SeqRecord hadamard_diagonals(DiagonalDirection direction, TriangleColor color,
                             std::uint64_t n_max);

// CSV emitter: one "n,value" line per index, exact decimal, no header.
void write_csv(const SeqRecord& seq, std::ostream& out);

}  // namespace qpascal
