// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "mff/baselines.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "mff/error.hpp"

namespace mff {

namespace {

void require_stack(std::span<const GrayImage> images) {
  if (images.size() < 2) throw Error(ErrorCode::invalid_argument, "fusion needs at least 2 images");
  require_same_shape(images);
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

// One analysis step on an even-sized band.
void analyze(const Band& in, Band& approx, WaveletLevel& level) {
  const std::size_t hw = in.width / 2;
  const std::size_t hh = in.height / 2;
  auto make = [&] { return Band{hw, hh, std::vector<double>(hw * hh)}; };
  approx = make();
  level.horizontal = make();
  level.vertical = make();
  level.diagonal = make();
  for (std::size_t y = 0; y < hh; ++y) {
    for (std::size_t x = 0; x < hw; ++x) {
      const double a = in.at(2 * x, 2 * y);
      const double b = in.at(2 * x + 1, 2 * y);
      const double c = in.at(2 * x, 2 * y + 1);
      const double d = in.at(2 * x + 1, 2 * y + 1);
      // rows first, then columns
      const double top_lo = (a + b) * kInvSqrt2;
      const double top_hi = (a - b) * kInvSqrt2;
      const double bot_lo = (c + d) * kInvSqrt2;
      const double bot_hi = (c - d) * kInvSqrt2;
      approx.at(x, y) = (top_lo + bot_lo) * kInvSqrt2;
      level.horizontal.at(x, y) = (top_hi + bot_hi) * kInvSqrt2;
      level.vertical.at(x, y) = (top_lo - bot_lo) * kInvSqrt2;
      level.diagonal.at(x, y) = (top_hi - bot_hi) * kInvSqrt2;
    }
  }
}

Band synthesize(const Band& approx, const WaveletLevel& level) {
  const std::size_t hw = approx.width;
  const std::size_t hh = approx.height;
  for (const Band* b : {&level.horizontal, &level.vertical, &level.diagonal}) {
    if (b->width != hw || b->height != hh || b->data.size() != hw * hh) {
      throw Error(ErrorCode::dimension_mismatch, "inconsistent wavelet band dimensions");
    }
  }
  Band out{2 * hw, 2 * hh, std::vector<double>(4 * hw * hh)};
  for (std::size_t y = 0; y < hh; ++y) {
    for (std::size_t x = 0; x < hw; ++x) {
      const double ll = approx.at(x, y);
      const double hl = level.horizontal.at(x, y);
      const double lh = level.vertical.at(x, y);
      const double hhv = level.diagonal.at(x, y);
      const double top_lo = (ll + lh) * kInvSqrt2;
      const double bot_lo = (ll - lh) * kInvSqrt2;
      const double top_hi = (hl + hhv) * kInvSqrt2;
      const double bot_hi = (hl - hhv) * kInvSqrt2;
      out.at(2 * x, 2 * y) = (top_lo + top_hi) * kInvSqrt2;
      out.at(2 * x + 1, 2 * y) = (top_lo - top_hi) * kInvSqrt2;
      out.at(2 * x, 2 * y + 1) = (bot_lo + bot_hi) * kInvSqrt2;
      out.at(2 * x + 1, 2 * y + 1) = (bot_lo - bot_hi) * kInvSqrt2;
    }
  }
  return out;
}

// Coefficient with the largest magnitude; ties keep the earliest input.
double max_abs_pick(std::span<const Band* const> bands, std::size_t i) {
  double best = bands[0]->data[i];
  for (std::size_t j = 1; j < bands.size(); ++j) {
    const double v = bands[j]->data[i];
    if (std::abs(v) > std::abs(best)) best = v;
  }
  return best;
}

}  // namespace

GrayImage fuse_average(std::span<const GrayImage> images) {
  require_stack(images);
  GrayImage out(images.front().width(), images.front().height());
  auto dst = out.samples();
  const double n = static_cast<double>(images.size());
  for (std::size_t i = 0; i < dst.size(); ++i) {
    double sum = 0.0;
    for (const auto& img : images) sum += img.samples()[i];
    dst[i] = sum / n;
  }
  return out;
}

PcaFusion fuse_pca(std::span<const GrayImage> images) {
  require_stack(images);
  const std::size_t n = images.size();
  const std::size_t pixels = images.front().size();

  std::vector<double> means(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (double v : images[i].samples()) sum += v;
    means[i] = sum / static_cast<double>(pixels);
  }
  Eigen::MatrixXd cov(n, n);
  const double denom = pixels > 1 ? static_cast<double>(pixels - 1) : 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto a = images[i].samples();
      const auto b = images[j].samples();
      double acc = 0.0;
      for (std::size_t p = 0; p < pixels; ++p) acc += (a[p] - means[i]) * (b[p] - means[j]);
      cov(i, j) = cov(j, i) = acc / denom;
    }
  }

  // Variances below this are rounding noise from centering constant images.
  constexpr double kZeroCovariance = 1e-18 * 255.0 * 255.0;
  if (cov.cwiseAbs().maxCoeff() <= kZeroCovariance) {
    return PcaFusion{fuse_average(images), std::vector<double>(n, 1.0 / static_cast<double>(n)), true};
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::degenerate, "covariance eigen-decomposition failed");
  }
  // Eigenvalues come sorted ascending.
  const Eigen::VectorXd dominant = solver.eigenvectors().col(static_cast<Eigen::Index>(n - 1));
  const double total = dominant.cwiseAbs().sum();
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = std::abs(dominant(static_cast<Eigen::Index>(i))) / total;

  GrayImage out(images.front().width(), images.front().height());
  auto dst = out.samples();
  for (std::size_t p = 0; p < pixels; ++p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += weights[i] * images[i].samples()[p];
    dst[p] = acc;
  }
  return PcaFusion{std::move(out), std::move(weights), false};
}

GrayImage pad_replicate(const GrayImage& img, std::size_t multiple) {
  if (multiple == 0) throw Error(ErrorCode::invalid_argument, "padding multiple must be at least 1");
  const std::size_t pw = (img.width() + multiple - 1) / multiple * multiple;
  const std::size_t ph = (img.height() + multiple - 1) / multiple * multiple;
  GrayImage out(pw, ph);
  for (std::size_t y = 0; y < ph; ++y) {
    const std::size_t sy = std::min(y, img.height() - 1);
    for (std::size_t x = 0; x < pw; ++x) out.at(x, y) = img.at(std::min(x, img.width() - 1), sy);
  }
  return out;
}

WaveletPyramid haar_dwt(const GrayImage& img, std::size_t levels) {
  if (levels < 1 || levels > 30 ||
      (std::size_t{1} << levels) > 2 * std::max(img.width(), img.height())) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(levels) + " wavelet levels is out of range for a " +
                    std::to_string(img.width()) + "x" + std::to_string(img.height()) + " image");
  }
  const GrayImage padded = pad_replicate(img, std::size_t{1} << levels);
  WaveletPyramid pyr;
  pyr.original_width = img.width();
  pyr.original_height = img.height();
  pyr.padded_width = padded.width();
  pyr.padded_height = padded.height();

  Band current{padded.width(), padded.height(),
               std::vector<double>(padded.samples().begin(), padded.samples().end())};
  pyr.levels.resize(levels);
  for (std::size_t l = 0; l < levels; ++l) {
    Band approx;
    analyze(current, approx, pyr.levels[l]);
    current = std::move(approx);
  }
  pyr.approximation = std::move(current);
  return pyr;
}

GrayImage haar_idwt(const WaveletPyramid& pyr) {
  if (pyr.levels.empty()) throw Error(ErrorCode::invalid_argument, "pyramid has no levels");
  const std::size_t scale = std::size_t{1} << pyr.levels.size();
  if (pyr.approximation.width * scale != pyr.padded_width ||
      pyr.approximation.height * scale != pyr.padded_height ||
      pyr.approximation.data.size() != pyr.approximation.width * pyr.approximation.height ||
      pyr.original_width == 0 || pyr.original_height == 0 ||
      pyr.original_width > pyr.padded_width || pyr.original_height > pyr.padded_height) {
    throw Error(ErrorCode::dimension_mismatch, "inconsistent wavelet band dimensions");
  }
  Band current = pyr.approximation;
  for (std::size_t l = pyr.levels.size(); l-- > 0;) current = synthesize(current, pyr.levels[l]);

  GrayImage out(pyr.original_width, pyr.original_height);
  for (std::size_t y = 0; y < out.height(); ++y)
    for (std::size_t x = 0; x < out.width(); ++x) out.at(x, y) = current.at(x, y);
  return out;
}

GrayImage fuse_wavelet(std::span<const GrayImage> images, std::size_t levels) {
  require_stack(images);
  std::vector<WaveletPyramid> pyrs;
  pyrs.reserve(images.size());
  for (const auto& img : images) pyrs.push_back(haar_dwt(img, levels));

  WaveletPyramid fused = pyrs.front();
  std::vector<const Band*> bands(images.size());
  for (std::size_t l = 0; l < levels; ++l) {
    for (Band WaveletLevel::*member :
         {&WaveletLevel::horizontal, &WaveletLevel::vertical, &WaveletLevel::diagonal}) {
      for (std::size_t j = 0; j < pyrs.size(); ++j) bands[j] = &(pyrs[j].levels[l].*member);
      Band& dst = fused.levels[l].*member;
      for (std::size_t i = 0; i < dst.data.size(); ++i) dst.data[i] = max_abs_pick(bands, i);
    }
  }
  const double n = static_cast<double>(pyrs.size());
  for (std::size_t i = 0; i < fused.approximation.data.size(); ++i) {
    double sum = 0.0;
    for (const auto& p : pyrs) sum += p.approximation.data[i];
    fused.approximation.data[i] = sum / n;
  }
  return haar_idwt(fused);
}

}  // namespace mff
