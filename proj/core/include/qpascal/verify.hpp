#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qpascal {

// Result of one exhaustive verification sweep. A sweep stops recording
// counterexamples after the first one but keeps counting checks.
struct VerifyReport {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;

  bool ok() const { return failures == 0; }
};

// Digitwise binom mod p against exact big-integer rows, all 0 <= k <= n <= max_n.
VerifyReport verify_lucas(std::uint32_t p, std::uint64_t max_n);

// Carry-count valuations against factor-counting on exact binomials,
// all 0 <= k <= n <= max_n.
VerifyReport verify_kummer(std::uint32_t p, std::uint64_t max_n);

// Carpet congruences (copies with sign, empty center) up to recursion depth
// `levels`, digitwise f_m against direct evaluation, and substitution masks
// against directly computed carpets.
VerifyReport verify_carpet(std::uint32_t levels);

// Closed-form coefficients against the step-by-step simulation for
// m in 0..4, n in 1..3, every position, t <= t_max.
VerifyReport verify_closed_form(std::uint64_t t_max);

// Row amplitude sums, shallow-diagonal Fibonacci identity and the diagonal
// recurrences, all indices <= max_n.
VerifyReport verify_sequences(std::uint64_t max_n);

// Every suite above at the given bounds.
std::vector<VerifyReport> verify_all(std::uint64_t lucas_max, std::uint64_t kummer_max,
                                     std::uint32_t carpet_levels, std::uint64_t t_max,
                                     std::uint64_t seq_max);

}  // namespace qpascal
