#include "qpascal/sequences.hpp"

#include <ostream>

#include "qpascal/closed_form.hpp"
#include "qpascal/errors.hpp"
#include "qpascal/numtheory.hpp"
#include "qpascal/walk.hpp"

namespace qpascal {

bool satisfies_recurrence(const SeqRecord& seq) {
  const std::size_t order = seq.recurrence.size();
  if (order == 0) return true;
  for (std::size_t i = order; i < seq.values.size(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < order; ++j) {
      acc += static_cast<long>(seq.recurrence[j]) * seq.values[i - 1 - j];
    }
    if (acc != seq.values[i]) return false;
  }
  return true;
}

SeqRecord row_amplitude_sums(std::uint64_t t_max) {
  SeqRecord rec;
  rec.name = "row-sums";
  rec.recurrence = {0, 2};
  WalkState s = initial_state({1, 1});
  for (std::uint64_t t = 0; t <= t_max; ++t) {
    if (t > 0) s = step(s);
    BigInt total = 0;
    for (std::size_t k = 0; k < s.support_size(); ++k) {
      total += s.up_coeff(k) + s.down_coeff(k);
    }
    rec.values.push_back(total);
  }
  return rec;
}

SeqRecord shallow_diagonals_pascal(std::uint64_t n_max) {
  SeqRecord rec;
  rec.name = "shallow-diagonals";
  rec.recurrence = {1, 1};
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    BigInt d = 0;
    for (std::uint64_t c = 0; 2 * c <= n; ++c) {
      d += binom_exact(BigInt(n - c), BigInt(c));
    }
    rec.values.push_back(d);
  }
  return rec;
}

SeqRecord hadamard_diagonals(DiagonalDirection direction, TriangleColor color,
                             std::uint64_t n_max) {
  if (n_max < 3) throw DomainError("hadamard_diagonals: requires n_max >= 3");
  const bool up_diag = direction == DiagonalDirection::AUp;
  const bool blue = color == TriangleColor::Blue;
  SeqRecord rec;
  rec.name = std::string(up_diag ? "a" : "b") + (blue ? "-blue" : "-red");
  rec.recurrence = up_diag ? std::vector<std::int64_t>{-1, 1, 2}
                           : std::vector<std::int64_t>{1, -1, 2};
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    BigInt total = 0;
    for (std::uint64_t c = 0; 2 * c <= n; ++c) {
      const std::uint64_t row = n - c;
      const std::uint64_t col = up_diag ? c : n - 2 * c;
      total += blue ? h_blue(row, col) : h_red(row, col);
    }
    rec.values.push_back(total);
  }
  return rec;
}

void write_csv(const SeqRecord& seq, std::ostream& out) {
  for (std::size_t i = 0; i < seq.values.size(); ++i) {
    out << i << ',' << seq.values[i].get_str() << '\n';
  }
}

}  // namespace qpascal
