// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NEWSPRINT_RASTER_HPP
#define NEWSPRINT_RASTER_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace newsprint {

/// Half-open integer pixel rectangle: [x0, x1) x [y0, y1).
struct Box {
  int x0 = 0;
  int y0 = 0;
  int x1 = 0;
  int y1 = 0;

  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
  long long area() const { return static_cast<long long>(width()) * height(); }
  bool valid() const { return x0 >= 0 && y0 >= 0 && x1 > x0 && y1 > y0; }
  bool contains(int x, int y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }

  friend bool operator==(const Box&, const Box&) = default;
};

/// Intersection; width/height <= 0 means the boxes are disjoint.
Box intersect(const Box& a, const Box& b);

/// Grayscale page raster, row-major, 0 = full ink, 255 = blank paper.
class PixelGrid {
 public:
  PixelGrid() = default;
  PixelGrid(int width, int height, std::uint8_t fill = 255);

  int width() const { return width_; }
  int height() const { return height_; }
  std::uint8_t at(int x, int y) const { return values_[static_cast<std::size_t>(y) * width_ + x]; }
  void set(int x, int y, std::uint8_t v) { values_[static_cast<std::size_t>(y) * width_ + x] = v; }
  std::span<const std::uint8_t> values() const { return values_; }
  std::span<std::uint8_t> values() { return values_; }

  friend bool operator==(const PixelGrid&, const PixelGrid&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> values_;
};

/// Per-pixel boolean grid, row-major.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height, bool fill = false);

  int width() const { return width_; }
  int height() const { return height_; }
  bool at(int x, int y) const { return bits_[static_cast<std::size_t>(y) * width_ + x] != 0; }
  void set(int x, int y, bool v) { bits_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  /// Number of true pixels.
  long long count() const;
  void fill_box(const Box& box, bool v);
  bool empty() const { return count() == 0; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Inclusion counts over mask prefixes; sums rectangles in O(1).
class IntegralMask {
 public:
  explicit IntegralMask(const BinaryMask& mask);
  /// True-pixel count inside box (clipped to the mask extent).
  long long count(const Box& box) const;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<long long> sums_;  // (w+1) x (h+1)
};

/// Split of an m x m RoI into a boundary set B and interior set I.
/// A pixel is in B iff the (2k+1)x(2k+1) Chebyshev window centered on it,
/// clipped at the RoI edge, sees both a true and a false target bit. The
/// band is taken from the ground-truth mask and is two-sided.
struct BandPartition {
  int m = 0;
  int k = 0;
  std::vector<std::uint8_t> boundary;  // m*m, 1 = boundary
  int boundary_count = 0;
  int interior_count = 0;

  bool is_boundary(int x, int y) const {
    return boundary[static_cast<std::size_t>(y) * m + x] != 0;
  }
};

/// |a cap b| / |a cup b| by pixel area; 0 when disjoint.
double iou(const Box& a, const Box& b);

/// Bitwise IoU; two empty masks count as identical (1.0).
/// Throws std::invalid_argument on dimension mismatch.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

/// Boundary band of a square RoI target mask. Throws if k < 1 or the mask
/// is not square.
BandPartition boundary_band(const BinaryMask& target, int k);

/// Boundary-band bitmap for a mask of any shape (page-resolution bands).
BinaryMask boundary_bits(const BinaryMask& mask, int k);

/// Area-averaged downsampling of the boxed region to m x m ink densities
/// in [0, 1] (density = 1 - intensity/255). Throws if the box leaves the
/// grid.
std::vector<double> crop_resample(const PixelGrid& grid, const Box& box, int m);

/// Nearest-neighbor upscale of an RoI mask onto page coordinates: true
/// only inside `box`, false elsewhere.
BinaryMask upsample_mask(const BinaryMask& roi_mask, const Box& box, int page_width,
                         int page_height);

/// Pixels under `region` become blank paper (255); others unchanged.
PixelGrid apply_white_mask(const PixelGrid& grid, const BinaryMask& region);

}  // namespace newsprint

#endif  // NEWSPRINT_RASTER_HPP
