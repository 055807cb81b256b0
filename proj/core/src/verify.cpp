#include "qpascal/verify.hpp"

#include <sstream>

#include "qpascal/closed_form.hpp"
#include "qpascal/numtheory.hpp"
#include "qpascal/render.hpp"
#include "qpascal/sequences.hpp"
#include "qpascal/walk.hpp"

namespace qpascal {

namespace {

void record_failure(VerifyReport& rep, const std::string& what) {
  if (rep.failures == 0) rep.first_counterexample = what;
  ++rep.failures;
}

// Exact Pascal rows by the additive recurrence; calls visit(n, k, binom(n,k)).
template <typename Visit>
void for_each_exact_binomial(std::uint64_t max_n, Visit&& visit) {
  std::vector<BigInt> row;
  row.reserve(max_n + 1);
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    row.push_back(1);
    for (std::uint64_t k = n >= 1 ? n - 1 : 0; k >= 1; --k) row[k] += row[k - 1];
    for (std::uint64_t k = 0; k <= n; ++k) visit(n, k, row[k]);
  }
}

}  // namespace

VerifyReport verify_lucas(std::uint32_t p, std::uint64_t max_n) {
  require_prime_base(p);
  VerifyReport rep{.suite = "lucas(p=" + std::to_string(p) + ")"};
  for_each_exact_binomial(max_n, [&](std::uint64_t n, std::uint64_t k, const BigInt& b) {
    const std::uint32_t lucas = binom_mod_lucas(BigInt(n), BigInt(k), p);
    const std::uint32_t exact = mod_u32(b, p);
    ++rep.checks;
    if (lucas != exact || is_binom_divisible(BigInt(n), BigInt(k), p) != (exact == 0)) {
      std::ostringstream what;
      what << "n=" << n << " k=" << k << ": lucas=" << lucas << " exact=" << exact;
      record_failure(rep, what.str());
    }
  });
  return rep;
}

VerifyReport verify_kummer(std::uint32_t p, std::uint64_t max_n) {
  require_prime_base(p);
  VerifyReport rep{.suite = "kummer(p=" + std::to_string(p) + ")"};
  for_each_exact_binomial(max_n, [&](std::uint64_t n, std::uint64_t k, const BigInt& b) {
    const std::size_t carries = nu_p_binom(BigInt(n), BigInt(k), p);
    const std::size_t direct = nu_p(b, p);
    ++rep.checks;
    if (carries != direct) {
      std::ostringstream what;
      what << "n=" << n << " k=" << k << ": carries=" << carries << " nu_p=" << direct;
      record_failure(rep, what.str());
    }
  });
  return rep;
}

VerifyReport verify_closed_form(std::uint64_t t_max) {
  VerifyReport rep{.suite = "closed-form(tmax=" + std::to_string(t_max) + ")"};
  for (std::uint32_t m = 0; m <= 4; ++m) {
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const CoinParams coin{m, n};
      WalkState s = initial_state(coin);
      for (std::uint64_t t = 0; t <= t_max; ++t) {
        if (t > 0) s = step(s);
        for (std::int64_t pos = -static_cast<std::int64_t>(t);
             pos <= static_cast<std::int64_t>(t); ++pos) {
          const BigInt cu = psi_up(coin, pos, t);
          const BigInt cd = psi_down(coin, pos, t);
          rep.checks += 2;
          if (cu != s.up(pos) || cd != s.down(pos)) {
            std::ostringstream what;
            what << "m=" << m << " n=" << n << " t=" << t << " pos=" << pos
                 << ": closed=(" << cu.get_str() << "," << cd.get_str()
                 << ") sim=(" << s.up(pos).get_str() << "," << s.down(pos).get_str() << ")";
            record_failure(rep, what.str());
          }
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_carpet(std::uint32_t levels) {
  VerifyReport rep{.suite = "carpet(levels=" + std::to_string(levels) + ")"};

  // Copies-with-sign and empty-center congruences of Phi mod 3, against a
  // directly evaluated table.
  std::size_t grid = 1;
  for (std::uint32_t l = 0; l <= levels; ++l) grid *= 3;
  std::vector<std::uint32_t> table(grid * grid);
  for (std::size_t y = 0; y < grid; ++y)
    for (std::size_t x = 0; x < grid; ++x) table[y * grid + x] = mod_u32(phi(x, y), 3);
  std::uint64_t block = 1;
  for (std::uint32_t n = 1; n <= levels; ++n) {
    block *= 3;
    for (std::uint32_t l = 0; l < 3; ++l) {
      for (std::uint32_t q = 0; q < 3; ++q) {
        const std::uint32_t sign = table[q * grid + l];  // Phi(l, q) mod 3
        for (std::uint64_t x = 0; x < block; ++x) {
          for (std::uint64_t y = 0; y < block; ++y) {
            const std::uint32_t shifted = table[(q * block + y) * grid + (l * block + x)];
            const std::uint32_t expected = table[y * grid + x] * sign % 3;
            ++rep.checks;
            if (shifted != expected) {
              std::ostringstream what;
              what << "Phi copy: n=" << n << " l=" << l << " q=" << q << " x=" << x
                   << " y=" << y << ": got " << shifted << " expected " << expected;
              record_failure(rep, what.str());
            }
          }
        }
      }
    }
  }

  // Digitwise f_m against direct evaluation.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    std::uint64_t bound = 1;
    for (std::uint32_t l = 0; l < std::min(levels, 3u); ++l) bound *= p;
    for (std::int64_t m = 1; m <= 4; ++m) {
      for (std::uint64_t x = 0; x < bound; ++x) {
        for (std::uint64_t y = 0; y < bound; ++y) {
          const std::uint32_t fast = f_m_mod_digitwise(m, BigInt(x), BigInt(y), p);
          const std::uint32_t direct = mod_u32(f_m(m, x, y), p);
          ++rep.checks;
          if (fast != direct) {
            std::ostringstream what;
            what << "f_m digitwise: m=" << m << " p=" << p << " x=" << x << " y=" << y
                 << ": digitwise=" << fast << " direct=" << direct;
            record_failure(rep, what.str());
          }
        }
      }
    }
  }

  // Substitution masks against directly computed carpets.
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      if (static_cast<std::uint64_t>(m) % p == 0) continue;  // degenerate, no mask
      const ResidueImage base = base_image(m, p);
      std::size_t size = 1;
      for (std::uint32_t k = 1; k <= std::min(levels, 3u); ++k) {
        size *= p;
        const ResidueImage expanded = recursive_expand(base, k);
        const CarpetImage direct = carpet_image({m, 1}, size, p);
        for (std::size_t y = 0; y < size; ++y) {
          for (std::size_t x = 0; x < size; ++x) {
            ++rep.checks;
            if (expanded.ink_xy(x, y) != direct.image.ink_xy(x, y)) {
              std::ostringstream what;
              what << "mask: m=" << m << " p=" << p << " k=" << k << " x=" << x
                   << " y=" << y;
              record_failure(rep, what.str());
            }
          }
        }
      }
    }
  }
  return rep;
}

VerifyReport verify_sequences(std::uint64_t max_n) {
  VerifyReport rep{.suite = "sequences(max=" + std::to_string(max_n) + ")"};

  const SeqRecord sums = row_amplitude_sums(max_n);
  for (std::uint64_t t = 0; t <= max_n; ++t) {
    const BigInt expected = pow_ui(BigInt(2), t % 2 == 0 ? t / 2 : (t + 1) / 2);
    ++rep.checks;
    if (sums.values[t] != expected) {
      record_failure(rep, "row sum t=" + std::to_string(t) + " != 2^ceil(t/2)");
    }
  }

  const SeqRecord diag = shallow_diagonals_pascal(max_n);
  BigInt fib_prev = 1, fib = 1;  // F_1, F_2
  for (std::uint64_t n = 0; n <= max_n; ++n) {
    ++rep.checks;
    if (diag.values[n] != fib_prev) {
      record_failure(rep, "shallow diagonal n=" + std::to_string(n) + " != Fibonacci");
    }
    const BigInt next = fib_prev + fib;
    fib_prev = fib;
    fib = next;
  }
  ++rep.checks;
  if (!satisfies_recurrence(diag)) record_failure(rep, "shallow diagonal recurrence");

  const SeqRecord a_blue = hadamard_diagonals(DiagonalDirection::AUp, TriangleColor::Blue, max_n);
  const SeqRecord a_red = hadamard_diagonals(DiagonalDirection::AUp, TriangleColor::Red, max_n);
  const SeqRecord b_blue = hadamard_diagonals(DiagonalDirection::BDown, TriangleColor::Blue, max_n);
  const SeqRecord b_red = hadamard_diagonals(DiagonalDirection::BDown, TriangleColor::Red, max_n);
  for (const SeqRecord* seq : {&a_blue, &a_red, &b_blue, &b_red}) {
    ++rep.checks;
    if (!satisfies_recurrence(*seq)) record_failure(rep, seq->name + " recurrence");
  }
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    rep.checks += 2;
    if (a_blue.values[n] != a_red.values[n - 2] - a_blue.values[n - 1]) {
      record_failure(rep, "A coupling (blue) at n=" + std::to_string(n));
    }
    if (a_red.values[n] != a_red.values[n - 2] + a_blue.values[n - 1]) {
      record_failure(rep, "A coupling (red) at n=" + std::to_string(n));
    }
    rep.checks += 2;
    if (b_blue.values[n] != b_red.values[n - 1] - b_blue.values[n - 2]) {
      record_failure(rep, "B coupling (blue) at n=" + std::to_string(n));
    }
    if (b_red.values[n] != b_red.values[n - 1] + b_blue.values[n - 2]) {
      record_failure(rep, "B coupling (red) at n=" + std::to_string(n));
    }
  }
  return rep;
}

std::vector<VerifyReport> verify_all(std::uint64_t lucas_max, std::uint64_t kummer_max,
                                     std::uint32_t carpet_levels, std::uint64_t t_max,
                                     std::uint64_t seq_max) {
  std::vector<VerifyReport> reports;
  for (std::uint32_t p : {2u, 3u, 5u}) reports.push_back(verify_lucas(p, lucas_max));
  for (std::uint32_t p : {2u, 3u, 5u}) reports.push_back(verify_kummer(p, kummer_max));
  reports.push_back(verify_closed_form(t_max));
  reports.push_back(verify_carpet(carpet_levels));
  reports.push_back(verify_sequences(seq_max));
  return reports;
}

}  // namespace qpascal
