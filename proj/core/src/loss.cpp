// Copyright 2026 The Newsprint Authors
// SPDX-License-Identifier: Apache-2.0

#include "newsprint/loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newsprint {

void LossConfig::validate() const {
  if (lambda < 0.0) throw std::invalid_argument("LossConfig: lambda must be >= 0");
  if (m < 2) throw std::invalid_argument("LossConfig: m must be >= 2");
  if (k < 1) throw std::invalid_argument("LossConfig: k must be >= 1");
  if (!(clamp_eps > 0.0 && clamp_eps < 0.5)) {
    throw std::invalid_argument("LossConfig: clamp_eps must be in (0, 0.5)");
  }
}

MaskTarget::MaskTarget(const BinaryMask& mask) {
  if (mask.width() != mask.height()) {
    throw std::invalid_argument("MaskTarget: mask must be square");
  }
  m_ = mask.width();
  bits_.assign(mask.bits().begin(), mask.bits().end());
}

MaskTarget::MaskTarget(int m, std::vector<std::uint8_t> bits) : m_(m), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(m) * m) {
    throw std::invalid_argument("MaskTarget: bits length must be m*m");
  }
}

BinaryMask MaskTarget::to_mask() const {
  BinaryMask out(m_, m_);
  for (int y = 0; y < m_; ++y) {
    for (int x = 0; x < m_; ++x) {
      out.set(x, y, at(x, y));
    }
  }
  return out;
}

MaskPrediction MaskPrediction::from_probabilities(int m, std::span<const double> probs,
                                                  double eps) {
  if (probs.size() != static_cast<std::size_t>(m) * m) {
    throw std::invalid_argument("MaskPrediction: probability grid must be m*m");
  }
  MaskPrediction pred;
  pred.m_ = m;
  pred.probs_.resize(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    pred.probs_[i] = std::clamp(probs[i], eps, 1.0 - eps);
  }
  return pred;
}

double pixel_bce(bool y, double yhat) {
  return y ? -std::log(yhat) : -std::log(1.0 - yhat);
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

LossBreakdown edgemask_loss(const MaskPrediction& pred, const MaskTarget& target,
                            const BandPartition& band, const LossConfig& cfg) {
  cfg.validate();
  const int m = cfg.m;
  if (pred.m() != m || target.m() != m || band.m != m) {
    throw std::invalid_argument("edgemask_loss: dimension mismatch");
  }
  if (band.k != cfg.k) {
    throw std::invalid_argument("edgemask_loss: band was not built with cfg.k");
  }

  LossBreakdown out;
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      const double h = pixel_bce(target.at(x, y), pred.at(x, y));
      if (band.is_boundary(x, y)) {
        out.boundary_sum += h;
        ++out.pixel_count_boundary;
      } else {
        out.interior_sum += h;
        ++out.pixel_count_interior;
      }
    }
  }
  out.total = (out.interior_sum + cfg.lambda * out.boundary_sum) / (static_cast<double>(m) * m);
  return out;
}

std::vector<double> edgemask_grad(std::span<const double> pred_logits, const MaskTarget& target,
                                  const BandPartition& band, const LossConfig& cfg) {
  cfg.validate();
  const int m = cfg.m;
  if (pred_logits.size() != static_cast<std::size_t>(m) * m || target.m() != m || band.m != m) {
    throw std::invalid_argument("edgemask_grad: dimension mismatch");
  }
  std::vector<double> grad(pred_logits.size());
  const double inv_m2 = 1.0 / (static_cast<double>(m) * m);
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * m + x;
      const double yhat = logistic(pred_logits[i]);
      const double w = band.is_boundary(x, y) ? cfg.lambda : 1.0;
      grad[i] = w * (yhat - (target.at(x, y) ? 1.0 : 0.0)) * inv_m2;
    }
  }
  return grad;
}

double vanilla_mask_loss(const MaskPrediction& pred, const MaskTarget& target) {
  if (pred.m() != target.m()) {
    throw std::invalid_argument("vanilla_mask_loss: dimension mismatch");
  }
  const int m = pred.m();
  double sum = 0.0;
  for (int y = 0; y < m; ++y) {
    for (int x = 0; x < m; ++x) {
      sum += pixel_bce(target.at(x, y), pred.at(x, y));
    }
  }
  return sum / (static_cast<double>(m) * m);
}

double total_loss(double l_cls, double l_box, double l_mask) {
  if (!std::isfinite(l_cls) || !std::isfinite(l_box) || !std::isfinite(l_mask)) {
    throw std::invalid_argument("total_loss: components must be finite");
  }
  return l_cls + l_box + l_mask;
}

}  // namespace newsprint
