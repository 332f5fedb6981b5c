// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NEWSPRINT_FONT_HPP
#define NEWSPRINT_FONT_HPP

#include <array>
#include <string>

#include "newsprint/raster.hpp"

namespace newsprint {

// Fixed 5x7 dot-matrix font over A-Z, 0-9, space, period and comma.
// Every character occupies a (5+1) x (7+1) cell at scale 1: one blank
// column of inter-character spacing and one blank row of leading.

inline constexpr int kGlyphWidth = 5;
inline constexpr int kGlyphHeight = 7;
inline constexpr int kCellWidth = 6;
inline constexpr int kCellHeight = 8;

struct Glyph {
  char character = ' ';
  std::array<std::uint8_t, kGlyphWidth * kGlyphHeight> bitmap{};  // row-major

  bool bit(int col, int row) const {
    return bitmap[static_cast<std::size_t>(row) * kGlyphWidth + col] != 0;
  }
};

bool glyph_supported(char c);

/// Throws std::invalid_argument for unsupported characters.
const Glyph& glyph_for(char c);

/// Ink-stamps `text` at (x, y) = top-left of the first cell. Pixels
/// outside the grid are skipped.
void draw_text(PixelGrid& grid, int x, int y, const std::string& text, int scale,
               std::uint8_t intensity = 0);

/// Cell-metric bounding box of a word: (5+1)*scale*len wide,
/// (7+1)*scale tall.
Box text_box(int x, int y, const std::string& text, int scale);

}  // namespace newsprint

#endif  // NEWSPRINT_FONT_HPP
