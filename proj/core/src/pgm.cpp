// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "newsprint/pgm.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace newsprint {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error("pgm: " + path.string() + ": " + what);
}

// Skips whitespace and '#' comment lines between header tokens.
int read_header_int(std::istream& in) {
  int c = in.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  if (c == EOF || !std::isdigit(c)) return -1;
  int value = 0;
  while (c != EOF && std::isdigit(c)) {
    value = value * 10 + (c - '0');
    c = in.get();
  }
  return value;
}

}  // namespace

void write_pgm(const PixelGrid& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  out << "P5\n" << grid.width() << " " << grid.height() << "\n255\n";
  out.write(reinterpret_cast<const char*>(grid.values().data()),
            static_cast<std::streamsize>(grid.values().size()));
  if (!out) fail(path, "write failed");
}

PixelGrid read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  char magic[2] = {};
  in.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '5') fail(path, "not a binary PGM (P5)");
  const int width = read_header_int(in);
  const int height = read_header_int(in);
  const int maxval = read_header_int(in);
  if (width < 1 || height < 1) fail(path, "bad dimensions");
  if (maxval != 255) fail(path, "unsupported maxval (want 255)");
  PixelGrid grid(width, height);
  in.read(reinterpret_cast<char*>(grid.values().data()),
          static_cast<std::streamsize>(grid.values().size()));
  if (in.gcount() != static_cast<std::streamsize>(grid.values().size())) {
    fail(path, "truncated pixel data");
  }
  return grid;
}

void write_mask_pgm(const BinaryMask& mask, const std::filesystem::path& path) {
  PixelGrid grid(mask.width(), mask.height(), 0);
  auto values = grid.values();
  const auto bits = mask.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    values[i] = bits[i] ? 255 : 0;
  }
  write_pgm(grid, path);
}

BinaryMask read_mask_pgm(const std::filesystem::path& path) {
  const PixelGrid grid = read_pgm(path);
  BinaryMask mask(grid.width(), grid.height());
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      const std::uint8_t v = grid.at(x, y);
      if (v != 0 && v != 255) fail(path, "mask pixel value must be 0 or 255");
      mask.set(x, y, v == 255);
    }
  }
  return mask;
}

}  // namespace newsprint
