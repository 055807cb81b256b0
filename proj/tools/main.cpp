// qpascal: exact quantum-walk amplitude tables, modular Pascal/carpet
// fractal rendering, and the exhaustive verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "qpascal/closed_form.hpp"
#include "qpascal/numtheory.hpp"
#include "qpascal/render.hpp"
#include "qpascal/sequences.hpp"
#include "qpascal/verify.hpp"
#include "qpascal/walk.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct RenderRequest {
  std::string kind;
  std::size_t rows = 180;
  std::uint32_t modulus = 2;
  std::uint32_t p = 3;
  std::uint32_t cap = 3;
  std::int64_t m = 1;
  std::uint32_t n = 1;
  std::size_t size = 81;
  std::uint32_t levels = 3;
  std::string output;
};

int run_render(const RenderRequest& req) {
  namespace fs = std::filesystem;
  qpascal::ResidueImage img(qpascal::Geometry::SquareXY, {}, 1, 1);
  qpascal::Palette palette;
  bool degenerate = false;
  std::string name;

  if (req.kind == "pascal-mod") {
    img = qpascal::pascal_mod_image(req.rows, req.modulus);
    palette = qpascal::Palette::default_residue(req.modulus);
    name = qpascal::default_filename("pascal-mod", 0, req.modulus, req.rows);
  } else if (req.kind == "pascal-valuation") {
    img = qpascal::pascal_valuation_image(req.rows, req.p, req.cap);
    palette = qpascal::Palette::default_valuation(req.cap);
    name = qpascal::default_filename("pascal-valuation", 0, req.p, req.rows);
  } else if (req.kind == "carpet") {
    if (req.m < 0) throw qpascal::DomainError("carpet coin requires m >= 0");
    auto carpet = qpascal::carpet_image(
        {static_cast<std::uint32_t>(req.m), req.n}, req.size, req.p);
    img = std::move(carpet.image);
    degenerate = carpet.degenerate_all_white;
    palette = qpascal::Palette::default_residue(req.p);
    name = qpascal::default_filename("carpet", req.m, req.p, req.size);
  } else if (req.kind == "base") {
    img = qpascal::base_image(req.m, req.p);
    palette = qpascal::Palette::default_residue(req.p);
    name = qpascal::default_filename("base", req.m, req.p, req.p);
  } else if (req.kind == "recursive") {
    img = qpascal::recursive_expand(qpascal::base_image(req.m, req.p), req.levels);
    palette = qpascal::Palette::default_residue(2);
    std::size_t side = 1;
    for (std::uint32_t i = 0; i < req.levels; ++i) side *= req.p;
    name = qpascal::default_filename("recursive", req.m, req.p, side);
  }

  const fs::path path = req.output.empty() ? fs::path(name) : fs::path(req.output);
  qpascal::write_image(img, palette, path);
  const std::size_t width =
      img.geometry() == qpascal::Geometry::TriangleRows ? 2 * img.rows() - 1 : img.cols();
  std::cout << "wrote " << path.string() << " (" << width << "x" << img.rows()
            << " px): cells zero=" << img.count_zero()
            << " nonzero=" << img.count_nonzero() << '\n';
  if (degenerate) {
    std::cout << "degenerate: p divides m*n, every scaled probability is 0 mod " << req.p
              << ", all pixels white\n";
  }
  return kExitOk;
}

int run_verify(const std::vector<qpascal::VerifyReport>& reports) {
  bool ok = true;
  for (const auto& rep : reports) {
    std::cout << rep.suite << ": " << rep.checks << " checks, " << rep.failures
              << " failures" << (rep.ok() ? "" : "  <-- FAIL") << '\n';
    if (!rep.ok()) {
      std::cout << "  first counterexample: " << rep.first_counterexample << '\n';
      ok = false;
    }
  }
  std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum-walk amplitudes and modular binomial fractals"};
  app.require_subcommand(1);

  // ---- render ----
  auto* render = app.add_subcommand("render", "Write a P3 portable pixmap");
  render->require_subcommand(1);
  RenderRequest req;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", req.output, "Output path (default: derived name)");
  };
  auto* r_mod = render->add_subcommand("pascal-mod", "Pascal's triangle modulo n");
  r_mod->add_option("--rows", req.rows, "Number of rows")->capture_default_str();
  r_mod->add_option("--mod", req.modulus, "Modulus (>= 2)")->required();
  add_output(r_mod);
  auto* r_val = render->add_subcommand("pascal-valuation",
                                       "p-adic valuations of Pascal's triangle");
  r_val->add_option("--rows", req.rows, "Number of rows")->capture_default_str();
  r_val->add_option("--p", req.p, "Prime base")->required();
  r_val->add_option("--cap", req.cap, "Valuation clamp")->capture_default_str();
  add_output(r_val);
  auto* r_carpet = render->add_subcommand("carpet", "Walk carpet f_m(x,y) mod p");
  r_carpet->add_option("--m", req.m, "Coin class m")->required();
  r_carpet->add_option("--n", req.n, "Scale class n")->capture_default_str();
  r_carpet->add_option("--p", req.p, "Prime modulus")->required();
  r_carpet->add_option("--size", req.size, "Side length (any size, not only p^k)")
      ->required();
  add_output(r_carpet);
  auto* r_base = render->add_subcommand("base", "p x p base image of f_m mod p");
  r_base->add_option("--m", req.m, "Coin class m")->required();
  r_base->add_option("--p", req.p, "Prime modulus")->required();
  add_output(r_base);
  auto* r_rec = render->add_subcommand(
      "recursive", "Substitution expansion of the base image (side p^levels)");
  r_rec->add_option("--m", req.m, "Coin class m")->required();
  r_rec->add_option("--p", req.p, "Prime modulus")->required();
  r_rec->add_option("--levels", req.levels, "Recursion depth k")->capture_default_str();
  add_output(r_rec);

  // ---- table ----
  auto* table = app.add_subcommand("table", "Exact integer tables");
  table->require_subcommand(1);
  std::uint64_t table_t = 0;
  std::uint32_t table_m = 1, table_n = 1;
  std::uint64_t table_r = 0;
  auto* t_walk = table->add_subcommand("walk-row",
                                       "Walk coefficients: lines \"pos<TAB>a<TAB>b\"");
  t_walk->add_option("--t", table_t, "Time step")->required();
  t_walk->add_option("--m", table_m, "Coin class m")->capture_default_str();
  t_walk->add_option("--n", table_n, "Scale class n")->capture_default_str();
  auto* t_pascal = table->add_subcommand("pascal-row", "One row of Pascal's triangle");
  t_pascal->add_option("--r", table_r, "Row index")->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Exhaustive invariant suites");
  verify->require_subcommand(1);
  std::uint32_t v_p = 0;
  std::uint64_t v_max = 1000;
  std::uint32_t v_levels = 3;
  std::uint64_t v_tmax = 40;
  std::uint64_t v_seq_max = 300;
  auto* v_lucas = verify->add_subcommand("lucas", "Digitwise binomials vs exact");
  v_lucas->add_option("--p", v_p, "Prime (default: 2, 3 and 5)");
  v_lucas->add_option("--max", v_max, "Largest n")->capture_default_str();
  auto* v_kummer = verify->add_subcommand("kummer", "Carry counts vs exact valuations");
  v_kummer->add_option("--p", v_p, "Prime (default: 2, 3 and 5)");
  v_kummer->add_option("--max", v_max, "Largest n")->capture_default_str();
  auto* v_carpet = verify->add_subcommand("carpet", "Carpet congruences and masks");
  v_carpet->add_option("--levels", v_levels, "Recursion depth")->capture_default_str();
  auto* v_closed = verify->add_subcommand("closed-form", "Closed form vs simulation");
  v_closed->add_option("--tmax", v_tmax, "Largest time step")->capture_default_str();
  auto* v_seq = verify->add_subcommand("sequences", "Row sums and diagonal recurrences");
  v_seq->add_option("--max", v_seq_max, "Largest index (>= 3)")->capture_default_str();
  auto* v_all = verify->add_subcommand("all", "Every suite at default bounds");

  // ---- sequences ----
  auto* sequences = app.add_subcommand("sequences", "Emit a sequence as CSV (n,value)");
  std::string seq_name;
  std::uint64_t seq_max = 32;
  sequences
      ->add_option("name", seq_name,
                   "row-sums | shallow-diagonals | a-blue | a-red | b-blue | b-red")
      ->required()
      ->check(CLI::IsMember({"row-sums", "shallow-diagonals", "a-blue", "a-red",
                             "b-blue", "b-red"}));
  sequences->add_option("--max", seq_max, "Largest index")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto* cmd : {r_mod, r_val, r_carpet, r_base, r_rec}) {
      if (cmd->parsed()) {
        req.kind = cmd->get_name();
        return run_render(req);
      }
    }

    if (t_walk->parsed()) {
      qpascal::dump_row(qpascal::evolve({table_m, table_n}, table_t), std::cout);
      return kExitOk;
    }
    if (t_pascal->parsed()) {
      qpascal::BigInt b = 1;
      for (std::uint64_t k = 0; k <= table_r; ++k) {
        std::cout << (k > 0 ? " " : "") << b.get_str();
        b *= table_r - k;
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
      }
      std::cout << '\n';
      return kExitOk;
    }

    std::vector<qpascal::VerifyReport> reports;
    auto primes = [&] {
      return v_p != 0 ? std::vector<std::uint32_t>{v_p}
                      : std::vector<std::uint32_t>{2, 3, 5};
    };
    if (v_lucas->parsed()) {
      for (std::uint32_t p : primes()) reports.push_back(qpascal::verify_lucas(p, v_max));
    } else if (v_kummer->parsed()) {
      for (std::uint32_t p : primes()) reports.push_back(qpascal::verify_kummer(p, v_max));
    } else if (v_carpet->parsed()) {
      reports.push_back(qpascal::verify_carpet(v_levels));
    } else if (v_closed->parsed()) {
      reports.push_back(qpascal::verify_closed_form(v_tmax));
    } else if (v_seq->parsed()) {
      reports.push_back(qpascal::verify_sequences(v_seq_max));
    } else if (v_all->parsed()) {
      reports = qpascal::verify_all(v_max, v_max, v_levels, v_tmax, v_seq_max);
    }
    if (!reports.empty()) return run_verify(reports);

    if (sequences->parsed()) {
      qpascal::SeqRecord rec;
      if (seq_name == "row-sums") {
        rec = qpascal::row_amplitude_sums(seq_max);
      } else if (seq_name == "shallow-diagonals") {
        rec = qpascal::shallow_diagonals_pascal(seq_max);
      } else {
        const auto dir = seq_name[0] == 'a' ? qpascal::DiagonalDirection::AUp
                                            : qpascal::DiagonalDirection::BDown;
        const auto color = seq_name.ends_with("blue") ? qpascal::TriangleColor::Blue
                                                      : qpascal::TriangleColor::Red;
        rec = qpascal::hadamard_diagonals(dir, color, seq_max);
      }
      qpascal::write_csv(rec, std::cout);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
