#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qpascal/bigint.hpp"
#include "qpascal/errors.hpp"
#include "qpascal/walk.hpp"

namespace qpascal {

enum class Geometry {
  TriangleRows,  // cell (r, c) defined for 0 <= c <= r
  SquareXY,      // cell (x, y), x rightward, y downward, origin top-left
};

struct ImageMode {
  enum class Kind { Residue, Valuation };
  Kind kind = Kind::Residue;
  std::uint32_t modulus = 2;  // residue modulus, or the prime p in valuation mode
  std::uint32_t cap = 3;      // valuation clamp (valuation mode only)
};

// 2-D grid of small cell values: residues mod n or clamped p-adic
// valuations. Cells outside the triangle are Blank; Blank and residue 0
// both render as background white but stay distinct in the data so that
// mask comparisons are unambiguous.
class ResidueImage {
 public:
  static constexpr std::int32_t kBlank = -1;

  ResidueImage(Geometry geometry, ImageMode mode, std::size_t rows, std::size_t cols)
      : geometry_(geometry), mode_(mode), rows_(rows), cols_(cols),
        cells_(rows * cols, kBlank) {}

  Geometry geometry() const { return geometry_; }
  const ImageMode& mode() const { return mode_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int32_t at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int32_t v) { cells_[r * cols_ + c] = v; }

  // Carpet addressing: x is the column, y the row.
  std::int32_t at_xy(std::size_t x, std::size_t y) const { return at(y, x); }
  void set_xy(std::size_t x, std::size_t y, std::int32_t v) { set(y, x, v); }

  bool blank(std::size_t r, std::size_t c) const { return at(r, c) == kBlank; }
  // "Ink": a cell that exists and holds a nonzero value.
  bool ink(std::size_t r, std::size_t c) const { return at(r, c) > 0; }
  bool ink_xy(std::size_t x, std::size_t y) const { return ink(y, x); }

  std::size_t count_zero() const;     // non-blank cells equal to 0
  std::size_t count_nonzero() const;  // non-blank cells different from 0

  bool operator==(const ResidueImage&) const = default;

 private:
  Geometry geometry_;
  ImageMode mode_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int32_t> cells_;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

// Color table: background (and residue 0) are white; colors[i] is the color
// of cell value i. All entries are pairwise distinct.
struct Palette {
  Rgb background{255, 255, 255};
  std::vector<Rgb> colors;

  // Residue palette: colors[0] = white, colors[1..modulus-1] distinct.
  static Palette default_residue(std::uint32_t modulus);
  // Valuation palette: 0 black, 1 orange, 2 red, 3 blue; indices above 3
  // get generated distinct colors.
  static Palette default_valuation(std::uint32_t cap);
};

// Pascal's triangle mod `modulus` (any modulus >= 2), computed row-wise by
// the additive recurrence; no big integers involved.
ResidueImage pascal_mod_image(std::size_t rows, std::uint32_t modulus);

// min(nu_p(binom(r, c)), cap) per cell, via Kummer carry counts.
ResidueImage pascal_valuation_image(std::size_t rows, std::uint32_t p, std::uint32_t cap);

struct CarpetImage {
  ResidueImage image;
  // Set when p divides m*n: every scaled probability is 0 mod p, the picture
  // is entirely white and carries no fractal. Not a failure.
  bool degenerate_all_white = false;
};

// Square image of f_m(x, y) mod p on [0, size)^2, evaluated digitwise.
// Nonzero cells are exactly the cells with scaled probability
// m * n^(x+y+1) * f_m(x,y)^2 nonzero mod p whenever p does not divide m*n.
CarpetImage carpet_image(const CoinParams& coin, std::size_t size, std::uint32_t p);

// p x p table of f_m(x, y) mod p, the substitution seed of the fractal.
ResidueImage base_image(std::int64_t m, std::uint32_t p);

// k-fold substitution of a p x p base image: every ink pixel is replaced by
// a copy of the base. Result is a p^k x p^k zero/nonzero mask (cells 0/1).
ResidueImage recursive_expand(const ResidueImage& base, std::uint32_t levels);

// Plain-text portable pixmap: "P3", width, height, maxval 255, then one
// "r g b" pixel per line in row-major order. Triangle geometry centers row
// r horizontally, padding with background. Output is byte-deterministic.
void write_image(const ResidueImage& img, const Palette& palette,
                 const std::filesystem::path& path);

// Same encoding, to a string (used by golden-file tests).
std::string encode_image(const ResidueImage& img, const Palette& palette);

// Repository file naming convention for rendered images.
std::string default_filename(std::string_view kind, std::int64_t m, std::uint32_t p,
                             std::size_t size);

}  // namespace qpascal
