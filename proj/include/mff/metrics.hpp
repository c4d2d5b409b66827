// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mff/image.hpp"

namespace mff {

inline constexpr double kPeak = 255.0;
inline constexpr std::size_t kUqiWindow = 8;
inline constexpr std::size_t kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

double rmse(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / MSE); +infinity when the images are identical.
double psnr(const GrayImage& a, const GrayImage& b);

/// Universal quality index averaged over every fully contained window
/// (stride 1). Windows whose Q denominator is zero are skipped.
double uqi(const GrayImage& a, const GrayImage& b, std::size_t window = kUqiWindow);

/// Mean SSIM over all valid positions of an 11x11 Gaussian (sigma 1.5) window.
double ssim(const GrayImage& a, const GrayImage& b);

struct SsimToInputs {
  double mean = 0.0;
  std::vector<double> per_input;
};

SsimToInputs ssim_to_inputs(const GrayImage& fused, std::span<const GrayImage> inputs);

struct MetricReport {
  double rmse = 0.0;
  double psnr = 0.0;
  double uqi = 0.0;
  double ssim = 0.0;
  std::size_t uqi_window = kUqiWindow;
  std::size_t ssim_window = kSsimWindow;
  double ssim_sigma = kSsimSigma;
};

MetricReport compare(const GrayImage& candidate, const GrayImage& reference,
                     std::size_t uqi_window = kUqiWindow);

}  // namespace mff
