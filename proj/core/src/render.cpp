#include "qpascal/render.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "parallel.hpp"
#include "qpascal/closed_form.hpp"
#include "qpascal/numtheory.hpp"

namespace qpascal {

namespace {

// Distinct colors for palette indices beyond the named tables. Channels are
// congruent 4 mod 8, which no named entry uses, so the two ranges never
// collide; injective for indices below 32768.
Rgb generated_color(std::uint32_t i) {
  const auto d0 = static_cast<std::uint8_t>(i % 32);
  const auto d1 = static_cast<std::uint8_t>(i / 32 % 32);
  const auto d2 = static_cast<std::uint8_t>(i / 1024 % 32);
  return Rgb{static_cast<std::uint8_t>(8 * d0 + 4), static_cast<std::uint8_t>(8 * d1 + 4),
             static_cast<std::uint8_t>(8 * d2 + 4)};
}

constexpr Rgb kResidueNamed[] = {
    {0, 0, 0},      // 1 black
    {200, 0, 0},    // 2 red
    {0, 120, 0},    // 3 green
    {0, 0, 200},    // 4 blue
    {230, 120, 0},  // 5 orange
    {130, 0, 130},  // 6 purple
    {0, 160, 160},  // 7 teal
    {210, 180, 0},  // 8 yellow
    {240, 100, 170},// 9 pink
    {110, 70, 20},  // 10 brown
    {104, 104, 104},// 11 gray
};

constexpr Rgb kValuationNamed[] = {
    {0, 0, 0},      // 0 black
    {255, 165, 0},  // 1 orange
    {255, 0, 0},    // 2 red
    {0, 0, 255},    // 3 blue
};

}  // namespace

std::size_t ResidueImage::count_zero() const {
  std::size_t n = 0;
  for (auto v : cells_) n += v == 0;
  return n;
}

std::size_t ResidueImage::count_nonzero() const {
  std::size_t n = 0;
  for (auto v : cells_) n += v > 0;
  return n;
}

Palette Palette::default_residue(std::uint32_t modulus) {
  Palette pal;
  pal.colors.resize(modulus);
  pal.colors[0] = pal.background;
  for (std::uint32_t i = 1; i < modulus; ++i) {
    pal.colors[i] = i <= std::size(kResidueNamed) ? kResidueNamed[i - 1]
                                                  : generated_color(i);
  }
  return pal;
}

Palette Palette::default_valuation(std::uint32_t cap) {
  Palette pal;
  pal.colors.resize(cap + 1);
  for (std::uint32_t i = 0; i <= cap; ++i) {
    pal.colors[i] = i < std::size(kValuationNamed) ? kValuationNamed[i]
                                                   : generated_color(i);
  }
  return pal;
}

ResidueImage pascal_mod_image(std::size_t rows, std::uint32_t modulus) {
  if (rows < 1) throw DomainError("pascal_mod_image: requires rows >= 1");
  if (modulus < 2) throw DomainError("pascal_mod_image: requires modulus >= 2");
  if (modulus > static_cast<std::uint32_t>(std::numeric_limits<std::int32_t>::max())) {
    throw DomainError("pascal_mod_image: modulus too large");
  }
  ResidueImage img(Geometry::TriangleRows, {ImageMode::Kind::Residue, modulus, 0},
                   rows, rows);
  std::vector<std::uint32_t> row(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    // In-place downward update keeps row[c] = binom(r, c) mod modulus.
    row[r] = 1 % modulus;
    for (std::size_t c = r >= 1 ? r - 1 : 0; c >= 1; --c) {
      row[c] = (row[c] + row[c - 1]) % modulus;
    }
    for (std::size_t c = 0; c <= r; ++c) {
      img.set(r, c, static_cast<std::int32_t>(row[c]));
    }
  }
  return img;
}

ResidueImage pascal_valuation_image(std::size_t rows, std::uint32_t p, std::uint32_t cap) {
  if (rows < 1) throw DomainError("pascal_valuation_image: requires rows >= 1");
  require_prime_base(p);
  ResidueImage img(Geometry::TriangleRows, {ImageMode::Kind::Valuation, p, cap},
                   rows, rows);
  detail::parallel_for(rows, [&](std::size_t r) {
    for (std::size_t c = 0; c <= r; ++c) {
      const std::size_t val = kummer_carries(BigInt(r), BigInt(c), p).count;
      img.set(r, c, static_cast<std::int32_t>(std::min<std::size_t>(val, cap)));
    }
  });
  return img;
}

CarpetImage carpet_image(const CoinParams& coin, std::size_t size, std::uint32_t p) {
  validate_coin(coin);
  require_prime_base(p);
  if (size < 1) throw DomainError("carpet_image: requires size >= 1");
  CarpetImage result{
      ResidueImage(Geometry::SquareXY, {ImageMode::Kind::Residue, p, 0}, size, size),
      static_cast<std::uint64_t>(coin.m) * coin.n % p == 0};
  if (result.degenerate_all_white) {
    for (std::size_t y = 0; y < size; ++y)
      for (std::size_t x = 0; x < size; ++x) result.image.set_xy(x, y, 0);
    return result;
  }
  ResidueImage& img = result.image;
  detail::parallel_for(size, [&](std::size_t y) {
    for (std::size_t x = 0; x < size; ++x) {
      img.set_xy(x, y, static_cast<std::int32_t>(
                           f_m_mod_digitwise(coin.m, BigInt(x), BigInt(y), p)));
    }
  });
  return result;
}

ResidueImage base_image(std::int64_t m, std::uint32_t p) {
  require_prime_base(p);
  ResidueImage img(Geometry::SquareXY, {ImageMode::Kind::Residue, p, 0}, p, p);
  for (std::uint32_t y = 0; y < p; ++y) {
    for (std::uint32_t x = 0; x < p; ++x) {
      img.set_xy(x, y, static_cast<std::int32_t>(mod_u32(f_m(m, x, y), p)));
    }
  }
  return img;
}

ResidueImage recursive_expand(const ResidueImage& base, std::uint32_t levels) {
  if (base.rows() != base.cols()) throw DomainError("recursive_expand: base must be square");
  if (levels < 1) throw DomainError("recursive_expand: requires levels >= 1");
  const std::size_t p = base.rows();
  std::size_t size = 1;
  for (std::uint32_t l = 0; l < levels; ++l) {
    size *= p;
    if (size > 8192) throw DomainError("recursive_expand: expansion too large");
  }

  ResidueImage mask(Geometry::SquareXY, {ImageMode::Kind::Residue, 2, 0}, p, p);
  for (std::size_t y = 0; y < p; ++y)
    for (std::size_t x = 0; x < p; ++x) mask.set_xy(x, y, base.ink_xy(x, y) ? 1 : 0);

  // Substitution: every ink pixel becomes one copy of the base mask.
  for (std::uint32_t l = 1; l < levels; ++l) {
    const std::size_t cur = mask.rows();
    ResidueImage next(Geometry::SquareXY, {ImageMode::Kind::Residue, 2, 0},
                      cur * p, cur * p);
    for (std::size_t y = 0; y < cur * p; ++y)
      for (std::size_t x = 0; x < cur * p; ++x) next.set_xy(x, y, 0);
    for (std::size_t y = 0; y < cur; ++y) {
      for (std::size_t x = 0; x < cur; ++x) {
        if (!mask.ink_xy(x, y)) continue;
        for (std::size_t b = 0; b < p; ++b)
          for (std::size_t a = 0; a < p; ++a)
            if (base.ink_xy(a, b)) next.set_xy(x * p + a, y * p + b, 1);
      }
    }
    mask = std::move(next);
  }
  return mask;
}

std::string encode_image(const ResidueImage& img, const Palette& palette) {
  const bool triangle = img.geometry() == Geometry::TriangleRows;
  const std::size_t height = img.rows();
  const std::size_t width = triangle ? 2 * img.rows() - 1 : img.cols();

  auto color_of = [&](std::int32_t v) -> Rgb {
    if (v == ResidueImage::kBlank) return palette.background;
    if (static_cast<std::size_t>(v) >= palette.colors.size()) {
      throw DomainError("palette has no color for cell value " + std::to_string(v));
    }
    return palette.colors[static_cast<std::size_t>(v)];
  };

  std::ostringstream out;
  out << "P3\n" << width << ' ' << height << "\n255\n";
  std::vector<Rgb> line;
  for (std::size_t r = 0; r < height; ++r) {
    line.assign(width, palette.background);
    if (triangle) {
      // Row r is centered: cell (r, c) lands on pixel column rows-1-r + 2c.
      for (std::size_t c = 0; c <= r; ++c) {
        line[img.rows() - 1 - r + 2 * c] = color_of(img.at(r, c));
      }
    } else {
      for (std::size_t x = 0; x < width; ++x) line[x] = color_of(img.at(r, x));
    }
    for (const Rgb& px : line) {
      out << static_cast<int>(px.r) << ' ' << static_cast<int>(px.g) << ' '
          << static_cast<int>(px.b) << '\n';
    }
  }
  return out.str();
}

void write_image(const ResidueImage& img, const Palette& palette,
                 const std::filesystem::path& path) {
  const std::string data = encode_image(img, palette);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.exceptions(std::ofstream::failbit | std::ofstream::badbit);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.close();
}

std::string default_filename(std::string_view kind, std::int64_t m, std::uint32_t p,
                             std::size_t size) {
  std::ostringstream name;
  name << kind << "_m" << m << "_p" << p << "_s" << size << ".ppm";
  return name.str();
}

}  // namespace qpascal
