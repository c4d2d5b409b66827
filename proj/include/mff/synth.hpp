// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mff/image.hpp"

namespace mff {

/// Where the split between the sharp and blurred halves runs.
enum class SplitGeometry { vertical, horizontal, diag_main, diag_anti };

std::optional<SplitGeometry> parse_geometry(std::string_view name);
std::string_view geometry_name(SplitGeometry g);

inline constexpr double kDefaultSigma = 2.0;

/// ceil(3 sigma), at least 1.
std::size_t default_radius(double sigma);

/// Normalized samples of exp(-i^2 / (2 sigma^2)) for i in [-radius, radius].
std::vector<double> gaussian_kernel(double sigma, std::size_t radius);

/// Separable (horizontal, then vertical) convolution with edge replication.
GrayImage gaussian_blur(const GrayImage& img, double sigma, std::size_t radius);

/// True when (x, y) belongs to the region input_a keeps sharp.
bool in_sharp_region(SplitGeometry g, std::size_t x, std::size_t y, std::size_t width,
                     std::size_t height);

/// Two complementary views of one original: input_a is sharp on the region and
/// blurred elsewhere, input_b the reverse.
struct FocusPair {
  GrayImage input_a;
  GrayImage input_b;
  GrayImage original;
  SplitGeometry geometry;
  double sigma;
  std::size_t radius;
};

FocusPair make_pair(const GrayImage& original, SplitGeometry geometry, double sigma,
                    std::size_t radius);

}  // namespace mff
