#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "qpascal/closed_form.hpp"
#include "qpascal/numtheory.hpp"
#include "qpascal/render.hpp"

using namespace qpascal;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path golden(const std::string& name) {
  return std::filesystem::path(QPASCAL_GOLDEN_DIR) / name;
}

}  // namespace

TEST_CASE("pascal_mod_image computes the additive rows") {
  const ResidueImage img = pascal_mod_image(4, 2);
  CHECK(img.at(0, 0) == 1);
  CHECK(img.at(1, 0) == 1);
  CHECK(img.at(1, 1) == 1);
  CHECK(img.at(2, 0) == 1);
  CHECK(img.at(2, 1) == 0);
  CHECK(img.at(2, 2) == 1);
  CHECK(img.at(3, 1) == 1);
  CHECK(img.blank(0, 1));
  CHECK(img.blank(2, 3));

  const ResidueImage one = pascal_mod_image(1, 7);
  CHECK(one.at(0, 0) == 1);
  CHECK(one.count_nonzero() == 1);

  CHECK_THROWS_AS(pascal_mod_image(4, 1), DomainError);
  CHECK_THROWS_AS(pascal_mod_image(0, 2), DomainError);
}

TEST_CASE("pascal_mod_image agrees with exact binomials") {
  for (std::uint32_t modulus : {2u, 3u, 5u, 6u, 7u, 12u}) {
    const ResidueImage img = pascal_mod_image(64, modulus);
    std::size_t mismatches = 0;
    for (std::size_t r = 0; r < 64; ++r) {
      for (std::size_t c = 0; c <= r; ++c) {
        mismatches += img.at(r, c) !=
                      static_cast<std::int32_t>(mod_u32(binom_exact(r, c), modulus));
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("mod 6 zeros are exactly the cells that vanish mod 2 and mod 3") {
  const ResidueImage m6 = pascal_mod_image(180, 6);
  const ResidueImage m2 = pascal_mod_image(180, 2);
  const ResidueImage m3 = pascal_mod_image(180, 3);
  std::size_t mismatches = 0;
  for (std::size_t r = 0; r < 180; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      const bool zero6 = m6.at(r, c) == 0;
      const bool zero23 = m2.at(r, c) == 0 && m3.at(r, c) == 0;
      mismatches += zero6 != zero23;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("triangle self-similarity mod 2 and the empty row below each block") {
  const ResidueImage img = pascal_mod_image(128, 2);
  for (std::uint32_t n = 0; n <= 6; ++n) {
    const std::size_t block = std::size_t{1} << n;
    if (2 * block > 128) break;
    std::size_t mismatches = 0;
    for (std::size_t r = 0; r < block; ++r) {
      for (std::size_t c = 0; c <= r; ++c) {
        mismatches += img.at(r, c) != img.at(r + block, c);
        mismatches += img.at(r, c) != img.at(r + block, c + block);
      }
    }
    REQUIRE(mismatches == 0);
    // Row 2^n: endpoints odd, interior even.
    REQUIRE(img.at(block, 0) == 1);
    REQUIRE(img.at(block, block) == 1);
    for (std::size_t c = 1; c < block; ++c) REQUIRE(img.at(block, c) == 0);
  }
}

TEST_CASE("triangle self-similarity mod p for p in {3, 5}") {
  // The copy at (l, q) is the original scaled by the unit binom(l, q) mod p,
  // so the zero mask is preserved and residues match after that factor.
  for (std::uint32_t p : {3u, 5u}) {
    for (std::uint32_t n = 1; n <= 2; ++n) {
      std::size_t block = 1;
      for (std::uint32_t i = 0; i < n; ++i) block *= p;
      const ResidueImage img = pascal_mod_image(block * p, p);
      std::size_t mismatches = 0;
      for (std::uint32_t l = 0; l < p; ++l) {
        for (std::uint32_t q = 0; q <= l; ++q) {
          const std::uint32_t unit = binom_mod_lucas(l, q, p);
          REQUIRE(unit != 0);
          for (std::size_t r = 0; r < block; ++r) {
            for (std::size_t c = 0; c <= r; ++c) {
              const auto shifted = static_cast<std::uint32_t>(img.at(r + l * block, c + q * block));
              const auto orig = static_cast<std::uint32_t>(img.at(r, c));
              mismatches += shifted != unit * orig % p;
              mismatches += (shifted == 0) != (orig == 0);
            }
          }
        }
      }
      REQUIRE(mismatches == 0);
    }
  }
}

TEST_CASE("valuation image basics") {
  const ResidueImage img = pascal_valuation_image(16, 2, 3);
  CHECK(img.at(4, 2) == 1);  // nu_2(6)
  for (std::size_t r = 0; r < 16; ++r) CHECK(img.at(r, 0) == 0);
  CHECK(img.blank(0, 1));
}

TEST_CASE("valuation image matches exact valuations and clamps at the cap") {
  const ResidueImage img = pascal_valuation_image(64, 2, 2);
  std::size_t mismatches = 0;
  for (std::size_t r = 0; r < 64; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      const auto exact = nu_p(binom_exact(r, c), 2);
      mismatches += img.at(r, c) != static_cast<std::int32_t>(std::min<std::size_t>(exact, 2));
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("valuation copies and the +1 level shift, p = 3") {
  const ResidueImage img = pascal_valuation_image(81, 3, 8);
  for (std::uint32_t n = 1; n <= 3; ++n) {
    std::size_t block = 1;
    for (std::uint32_t i = 0; i < n; ++i) block *= 3;
    if (3 * block > 81) break;
    std::size_t mismatches = 0;
    // Copies: valuation unchanged when a high digit pair q <= l is added.
    for (std::uint32_t l = 0; l < 3; ++l) {
      for (std::uint32_t q = 0; q <= l; ++q) {
        for (std::size_t r = 0; r < block; ++r) {
          for (std::size_t c = 0; c <= r; ++c) {
            mismatches += img.at(r + l * block, c + q * block) != img.at(r, c);
          }
        }
      }
    }
    REQUIRE(mismatches == 0);
    // One level down inside a previously empty region: valuation + 1.
    if (block >= 3) {
      const std::size_t sub = block / 3;
      std::size_t shift_mismatches = 0;
      for (std::uint32_t l = 0; l < 3; ++l) {
        for (std::uint32_t q = 0; q < l; ++q) {
          for (std::uint32_t s = 0; s < 3; ++s) {
            for (std::uint32_t t = s + 1; t < 3; ++t) {
              for (std::size_t r = 0; r < sub; ++r) {
                for (std::size_t c = 0; c <= r; ++c) {
                  const std::size_t rr = l * block + s * sub + r;
                  const std::size_t cc = q * block + t * sub + c;
                  shift_mismatches += img.at(rr, cc) != img.at(r, c) + 1;
                }
              }
            }
          }
        }
      }
      REQUIRE(shift_mismatches == 0);
    }
  }
}

TEST_CASE("base image tables") {
  const ResidueImage b13 = base_image(1, 3);
  const std::int32_t expected[3][3] = {{1, 1, 1}, {1, 0, 2}, {1, 2, 1}};
  for (std::size_t y = 0; y < 3; ++y)
    for (std::size_t x = 0; x < 3; ++x) REQUIRE(b13.at_xy(x, y) == expected[y][x]);

  const ResidueImage b12 = base_image(1, 2);
  CHECK(b12.at_xy(0, 0) == 1);
  CHECK(b12.at_xy(1, 0) == 1);
  CHECK(b12.at_xy(0, 1) == 1);
  CHECK(b12.at_xy(1, 1) == 0);

  for (std::int64_t m = 0; m <= 5; ++m) {
    const ResidueImage b = base_image(m, 2);
    CHECK(b.at_xy(1, 1) == ((1 - m) % 2 + 2) % 2);
  }
}

TEST_CASE("carpet image equals the base image at size p") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t m = 1; m < p; ++m) {
      const CarpetImage carpet = carpet_image({m, 1}, p, p);
      REQUIRE_FALSE(carpet.degenerate_all_white);
      const ResidueImage base = base_image(m, p);
      for (std::size_t y = 0; y < p; ++y)
        for (std::size_t x = 0; x < p; ++x)
          REQUIRE(carpet.image.at_xy(x, y) == base.at_xy(x, y));
    }
  }
}

TEST_CASE("carpet of the m=1 coin mod 3: empty center block") {
  const CarpetImage carpet = carpet_image({1, 1}, 27, 3);
  REQUIRE_FALSE(carpet.degenerate_all_white);
  for (std::size_t y = 9; y < 18; ++y)
    for (std::size_t x = 9; x < 18; ++x) REQUIRE(carpet.image.at_xy(x, y) == 0);
  // The grid starts with the 3x3 base in its top-left corner.
  CHECK(carpet.image.at_xy(1, 1) == 0);
  CHECK(carpet.image.at_xy(2, 1) == 2);
}

TEST_CASE("carpet mod 2 of the m=1 coin is the triangle mask") {
  const CarpetImage carpet = carpet_image({1, 1}, 64, 2);
  std::size_t mismatches = 0;
  for (std::size_t y = 0; y < 64; ++y) {
    for (std::size_t x = 0; x < 64; ++x) {
      const bool ink = carpet.image.ink_xy(x, y);
      const bool odd = binom_mod_lucas(x + y, x, 2) != 0;
      mismatches += ink != odd;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("degenerate carpets: p divides m*n") {
  for (const CoinParams coin : {CoinParams{3, 1}, CoinParams{1, 3}, CoinParams{0, 1},
                                CoinParams{6, 2}}) {
    const CarpetImage carpet = carpet_image(coin, 9, 3);
    CHECK(carpet.degenerate_all_white);
    CHECK(carpet.image.count_nonzero() == 0);
    CHECK(carpet.image.count_zero() == 81);
  }
  CHECK_FALSE(carpet_image({2, 2}, 9, 3).degenerate_all_white);
}

TEST_CASE("recursive expansion at one level is the base mask") {
  const ResidueImage base = base_image(2, 3);
  const ResidueImage mask = recursive_expand(base, 1);
  REQUIRE(mask.rows() == 3);
  for (std::size_t y = 0; y < 3; ++y)
    for (std::size_t x = 0; x < 3; ++x) REQUIRE(mask.ink_xy(x, y) == base.ink_xy(x, y));
}

TEST_CASE("recursive expansion multiplies ink counts") {
  const ResidueImage base = base_image(1, 3);  // 8 of 9 cells ink
  const ResidueImage two = recursive_expand(base, 2);
  REQUIRE(two.rows() == 9);
  CHECK(two.count_nonzero() == 64);
  const ResidueImage three = recursive_expand(base, 3);
  CHECK(three.count_nonzero() == 512);
}

TEST_CASE("recursive expansion equals the directly computed carpet mask") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t m = 1; m <= 4; ++m) {
      if (m % p == 0) continue;  // degenerate: no fractal to compare
      const ResidueImage base = base_image(m, p);
      std::size_t size = 1;
      for (std::uint32_t k = 1; k <= 3; ++k) {
        size *= p;
        const ResidueImage expanded = recursive_expand(base, k);
        const CarpetImage direct = carpet_image({m, 1}, size, p);
        std::size_t mismatches = 0;
        for (std::size_t y = 0; y < size; ++y)
          for (std::size_t x = 0; x < size; ++x)
            mismatches += expanded.ink_xy(x, y) != direct.image.ink_xy(x, y);
        REQUIRE(mismatches == 0);
      }
    }
  }
}

TEST_CASE("recursive expansion rejects bad input") {
  ResidueImage not_square(Geometry::SquareXY, {}, 2, 3);
  CHECK_THROWS_AS(recursive_expand(not_square, 2), DomainError);
  CHECK_THROWS_AS(recursive_expand(base_image(1, 3), 0), DomainError);
  CHECK_THROWS_AS(recursive_expand(base_image(1, 5), 9), DomainError);
}

TEST_CASE("default palettes map zero to white and stay injective") {
  const Palette residue = Palette::default_residue(97);
  CHECK(residue.colors[0] == residue.background);
  std::set<std::tuple<int, int, int>> seen;
  for (const Rgb& c : residue.colors) seen.insert({c.r, c.g, c.b});
  CHECK(seen.size() == residue.colors.size());

  const Palette valuation = Palette::default_valuation(9);
  CHECK(valuation.colors[0] == Rgb{0, 0, 0});
  CHECK(valuation.colors[1] == Rgb{255, 165, 0});
  CHECK(valuation.colors[2] == Rgb{255, 0, 0});
  CHECK(valuation.colors[3] == Rgb{0, 0, 255});
  seen.clear();
  for (const Rgb& c : valuation.colors) seen.insert({c.r, c.g, c.b});
  CHECK(seen.size() == valuation.colors.size());
}

TEST_CASE("ppm encoding of a single white pixel") {
  ResidueImage img(Geometry::SquareXY, {}, 1, 1);
  img.set(0, 0, 0);
  CHECK(encode_image(img, Palette::default_residue(2)) == "P3\n1 1\n255\n255 255 255\n");
}

TEST_CASE("ppm golden files") {
  CHECK(encode_image(base_image(1, 3), Palette::default_residue(3)) ==
        slurp(golden("base_m1_p3.ppm")));
  CHECK(encode_image(pascal_mod_image(4, 2), Palette::default_residue(2)) ==
        slurp(golden("pascal-mod_p2_s4.ppm")));
  CHECK(encode_image(pascal_valuation_image(4, 2, 3), Palette::default_valuation(3)) ==
        slurp(golden("pascal-valuation_p2_s4.ppm")));
}

TEST_CASE("write_image emits byte-identical files across runs") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qpascal_render_test";
  fs::create_directories(dir);
  const CarpetImage carpet = carpet_image({1, 1}, 27, 3);
  const Palette pal = Palette::default_residue(3);
  write_image(carpet.image, pal, dir / "a.ppm");
  write_image(carpet.image, pal, dir / "b.ppm");
  CHECK(slurp(dir / "a.ppm") == slurp(dir / "b.ppm"));
  CHECK(slurp(dir / "a.ppm") == encode_image(carpet.image, pal));
  fs::remove_all(dir);
}

TEST_CASE("write_image propagates I/O failures") {
  ResidueImage img(Geometry::SquareXY, {}, 1, 1);
  img.set(0, 0, 0);
  CHECK_THROWS(write_image(img, Palette::default_residue(2),
                           "/nonexistent-dir/qpascal/x.ppm"));
}

TEST_CASE("carpet sizes are not restricted to powers of p") {
  const CarpetImage carpet = carpet_image({2, 1}, 10, 3);
  REQUIRE(carpet.image.rows() == 10);
  std::size_t mismatches = 0;
  for (std::size_t y = 0; y < 10; ++y)
    for (std::size_t x = 0; x < 10; ++x)
      mismatches += carpet.image.at_xy(x, y) !=
                    static_cast<std::int32_t>(mod_u32(f_m(2, x, y), 3));
  CHECK(mismatches == 0);
}

TEST_CASE("default file names follow the kind_m_p_s convention") {
  CHECK(default_filename("carpet", 1, 3, 81) == "carpet_m1_p3_s81.ppm");
  CHECK(default_filename("base", -2, 5, 5) == "base_m-2_p5_s5.ppm");
}
