// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NEWSPRINT_LOSS_HPP
#define NEWSPRINT_LOSS_HPP

#include <span>
#include <vector>

#include "newsprint/raster.hpp"

namespace newsprint {

/// Knobs of the boundary-weighted mask loss.
struct LossConfig {
  double lambda = 100.0;   // boundary pixel weight, >= 0
  int m = 28;              // RoI side length in pixels
  int k = 2;               // band window size
  double clamp_eps = 1e-7; // probability clamp, in (0, 0.5)

  void validate() const;
};

/// Ground-truth m x m binary grid.
class MaskTarget {
 public:
  MaskTarget() = default;
  explicit MaskTarget(const BinaryMask& mask);
  MaskTarget(int m, std::vector<std::uint8_t> bits);

  int m() const { return m_; }
  bool at(int x, int y) const { return bits_[static_cast<std::size_t>(y) * m_ + x] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  BinaryMask to_mask() const;

 private:
  int m_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Predicted m x m probability grid; every value clamped into
/// [eps, 1 - eps] on construction so the log terms stay finite.
class MaskPrediction {
 public:
  MaskPrediction() = default;
  static MaskPrediction from_probabilities(int m, std::span<const double> probs, double eps);

  int m() const { return m_; }
  double at(int x, int y) const { return probs_[static_cast<std::size_t>(y) * m_ + x]; }
  std::span<const double> values() const { return probs_; }

 private:
  int m_ = 0;
  std::vector<double> probs_;
};

/// Loss value with its interior/boundary split:
/// total = (interior_sum + lambda * boundary_sum) / m^2.
struct LossBreakdown {
  double total = 0.0;
  double interior_sum = 0.0;
  double boundary_sum = 0.0;
  int pixel_count_boundary = 0;
  int pixel_count_interior = 0;
};

/// -[y ln(yhat) + (1-y) ln(1-yhat)] for one pixel.
double pixel_bce(bool y, double yhat);

/// Boundary-weighted mask loss: per-pixel BCE summed over the interior
/// set plus lambda times the sum over the boundary set, normalized by
/// m^2 (not by the weighted pixel count). `band` must be derived from
/// `target` with cfg.k.
LossBreakdown edgemask_loss(const MaskPrediction& pred, const MaskTarget& target,
                            const BandPartition& band, const LossConfig& cfg);

/// Gradient of edgemask_loss w.r.t. per-pixel logits, with the
/// prediction parameterized as the logistic of each logit:
/// w_ij * (yhat_ij - y_ij) / m^2, w = lambda on the band and 1 inside.
std::vector<double> edgemask_grad(std::span<const double> pred_logits, const MaskTarget& target,
                                  const BandPartition& band, const LossConfig& cfg);

/// Mean per-pixel BCE over all m^2 pixels.
double vanilla_mask_loss(const MaskPrediction& pred, const MaskTarget& target);

/// Multi-task sum; the mask term may be the boundary-weighted value.
/// Throws on non-finite input.
double total_loss(double l_cls, double l_box, double l_mask);

double logistic(double x);

}  // namespace newsprint

#endif  // NEWSPRINT_LOSS_HPP
