// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NEWSPRINT_PGM_HPP
#define NEWSPRINT_PGM_HPP

#include <filesystem>

#include "newsprint/raster.hpp"

namespace newsprint {

// Binary PGM (P5, maxval 255). Masks store true as 255 and false as 0.

void write_pgm(const PixelGrid& grid, const std::filesystem::path& path);
PixelGrid read_pgm(const std::filesystem::path& path);

void write_mask_pgm(const BinaryMask& mask, const std::filesystem::path& path);
BinaryMask read_mask_pgm(const std::filesystem::path& path);

}  // namespace newsprint

#endif  // NEWSPRINT_PGM_HPP
