// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "newsprint/raster.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace newsprint {

Box intersect(const Box& a, const Box& b) {
  return Box{std::max(a.x0, b.x0), std::max(a.y0, b.y0), std::min(a.x1, b.x1),
             std::min(a.y1, b.y1)};
}

PixelGrid::PixelGrid(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("PixelGrid: width and height must be >= 1");
  }
  values_.assign(static_cast<std::size_t>(width) * height, fill);
}

BinaryMask::BinaryMask(int width, int height, bool fill) : width_(width), height_(height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("BinaryMask: width and height must be >= 1");
  }
  bits_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

long long BinaryMask::count() const {
  return std::accumulate(bits_.begin(), bits_.end(), 0LL,
                         [](long long acc, std::uint8_t b) { return acc + (b != 0); });
}

void BinaryMask::fill_box(const Box& box, bool v) {
  const Box clipped = intersect(box, Box{0, 0, width_, height_});
  for (int y = clipped.y0; y < clipped.y1; ++y) {
    for (int x = clipped.x0; x < clipped.x1; ++x) {
      set(x, y, v);
    }
  }
}

IntegralMask::IntegralMask(const BinaryMask& mask)
    : width_(mask.width()), height_(mask.height()) {
  sums_.assign(static_cast<std::size_t>(width_ + 1) * (height_ + 1), 0);
  for (int y = 0; y < height_; ++y) {
    long long row = 0;
    for (int x = 0; x < width_; ++x) {
      row += mask.at(x, y) ? 1 : 0;
      sums_[static_cast<std::size_t>(y + 1) * (width_ + 1) + (x + 1)] =
          sums_[static_cast<std::size_t>(y) * (width_ + 1) + (x + 1)] + row;
    }
  }
}

long long IntegralMask::count(const Box& box) const {
  const Box c = intersect(box, Box{0, 0, width_, height_});
  if (c.width() <= 0 || c.height() <= 0) return 0;
  const auto s = [&](int x, int y) {
    return sums_[static_cast<std::size_t>(y) * (width_ + 1) + x];
  };
  return s(c.x1, c.y1) - s(c.x0, c.y1) - s(c.x1, c.y0) + s(c.x0, c.y0);
}

double iou(const Box& a, const Box& b) {
  const Box c = intersect(a, b);
  if (c.width() <= 0 || c.height() <= 0) return 0.0;
  const long long inter = c.area();
  const long long uni = a.area() + b.area() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("mask_iou: dimension mismatch");
  }
  long long inter = 0;
  long long uni = 0;
  const auto ab = a.bits();
  const auto bb = b.bits();
  for (std::size_t i = 0; i < ab.size(); ++i) {
    const bool x = ab[i] != 0;
    const bool y = bb[i] != 0;
    inter += (x && y);
    uni += (x || y);
  }
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

BinaryMask boundary_bits(const BinaryMask& mask, int k) {
  if (k < 1) throw std::invalid_argument("boundary band: k must be >= 1");
  const int w = mask.width();
  const int h = mask.height();
  const IntegralMask integral(mask);
  BinaryMask out(w, h, false);
  for (int y = 0; y < h; ++y) {
    const int wy0 = std::max(0, y - k);
    const int wy1 = std::min(h, y + k + 1);
    for (int x = 0; x < w; ++x) {
      const int wx0 = std::max(0, x - k);
      const int wx1 = std::min(w, x + k + 1);
      const long long trues = integral.count(Box{wx0, wy0, wx1, wy1});
      const long long total = static_cast<long long>(wx1 - wx0) * (wy1 - wy0);
      out.set(x, y, trues > 0 && trues < total);
    }
  }
  return out;
}

BandPartition boundary_band(const BinaryMask& target, int k) {
  if (target.width() != target.height()) {
    throw std::invalid_argument("boundary_band: RoI mask must be square");
  }
  const BinaryMask band = boundary_bits(target, k);
  BandPartition part;
  part.m = target.width();
  part.k = k;
  part.boundary.assign(band.bits().begin(), band.bits().end());
  part.boundary_count = static_cast<int>(band.count());
  part.interior_count = part.m * part.m - part.boundary_count;
  return part;
}

std::vector<double> crop_resample(const PixelGrid& grid, const Box& box, int m) {
  if (!box.valid() || box.x1 > grid.width() || box.y1 > grid.height()) {
    throw std::invalid_argument("crop_resample: box out of grid bounds");
  }
  if (m < 1) throw std::invalid_argument("crop_resample: m must be >= 1");

  std::vector<double> out(static_cast<std::size_t>(m) * m, 0.0);
  const double sx = static_cast<double>(box.width()) / m;
  const double sy = static_cast<double>(box.height()) / m;
  for (int oy = 0; oy < m; ++oy) {
    const double gy0 = box.y0 + oy * sy;
    const double gy1 = box.y0 + (oy + 1) * sy;
    for (int ox = 0; ox < m; ++ox) {
      const double gx0 = box.x0 + ox * sx;
      const double gx1 = box.x0 + (ox + 1) * sx;
      double acc = 0.0;
      // area-weighted average over the covered input pixels
      for (int py = static_cast<int>(gy0); py < gy1; ++py) {
        const double cy = std::min(gy1, static_cast<double>(py + 1)) - std::max(gy0, static_cast<double>(py));
        if (cy <= 0) continue;
        for (int px = static_cast<int>(gx0); px < gx1; ++px) {
          const double cx =
              std::min(gx1, static_cast<double>(px + 1)) - std::max(gx0, static_cast<double>(px));
          if (cx <= 0) continue;
          const double density = 1.0 - grid.at(px, py) / 255.0;
          acc += density * cx * cy;
        }
      }
      out[static_cast<std::size_t>(oy) * m + ox] = acc / (sx * sy);
    }
  }
  return out;
}

BinaryMask upsample_mask(const BinaryMask& roi_mask, const Box& box, int page_width,
                         int page_height) {
  BinaryMask out(page_width, page_height, false);
  const Box clipped = intersect(box, Box{0, 0, page_width, page_height});
  if (clipped.width() <= 0 || clipped.height() <= 0) return out;
  const int mw = roi_mask.width();
  const int mh = roi_mask.height();
  for (int y = clipped.y0; y < clipped.y1; ++y) {
    const int ry = static_cast<int>(static_cast<long long>(y - box.y0) * mh / box.height());
    for (int x = clipped.x0; x < clipped.x1; ++x) {
      const int rx = static_cast<int>(static_cast<long long>(x - box.x0) * mw / box.width());
      out.set(x, y, roi_mask.at(rx, ry));
    }
  }
  return out;
}

PixelGrid apply_white_mask(const PixelGrid& grid, const BinaryMask& region) {
  if (grid.width() != region.width() || grid.height() != region.height()) {
    throw std::invalid_argument("apply_white_mask: dimension mismatch");
  }
  PixelGrid out = grid;
  const auto bits = region.bits();
  auto values = out.values();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) values[i] = 255;
  }
  return out;
}

}  // namespace newsprint
