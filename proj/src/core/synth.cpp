// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "mff/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mff/error.hpp"

namespace mff {

std::optional<SplitGeometry> parse_geometry(std::string_view name) {
  if (name == "vertical" || name == "V") return SplitGeometry::vertical;
  if (name == "horizontal" || name == "H") return SplitGeometry::horizontal;
  if (name == "diag_main" || name == "D") return SplitGeometry::diag_main;
  if (name == "diag_anti") return SplitGeometry::diag_anti;
  return std::nullopt;
}

std::string_view geometry_name(SplitGeometry g) {
  switch (g) {
    case SplitGeometry::vertical: return "vertical";
    case SplitGeometry::horizontal: return "horizontal";
    case SplitGeometry::diag_main: return "diag_main";
    case SplitGeometry::diag_anti: return "diag_anti";
  }
  return "unknown";
}

std::size_t default_radius(double sigma) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(3.0 * sigma)));
}

std::vector<double> gaussian_kernel(double sigma, std::size_t radius) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::invalid_argument, "blur sigma must be positive, got " + std::to_string(sigma));
  }
  if (radius < 1) throw Error(ErrorCode::invalid_argument, "blur radius must be at least 1");
  std::vector<double> w(2 * radius + 1);
  const double r = static_cast<double>(radius);
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double d = static_cast<double>(i) - r;
    w[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
  }
  // Sum from the tails inward so mirrored weights see identical rounding.
  for (std::size_t i = 0; i < radius; ++i) sum += w[i] + w[w.size() - 1 - i];
  sum += w[radius];
  for (double& v : w) v /= sum;
  return w;
}

GrayImage gaussian_blur(const GrayImage& img, double sigma, std::size_t radius) {
  const auto k = gaussian_kernel(sigma, radius);
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const auto clamp_index = [](std::ptrdiff_t i, std::size_t n) {
    return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, static_cast<std::ptrdiff_t>(n) - 1));
  };
  const auto r = static_cast<std::ptrdiff_t>(radius);

  GrayImage tmp(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t i = -r; i <= r; ++i) {
        acc += k[static_cast<std::size_t>(i + r)] *
               img.at(clamp_index(static_cast<std::ptrdiff_t>(x) + i, w), y);
      }
      tmp.at(x, y) = acc;
    }
  }
  GrayImage out(w, h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double acc = 0.0;
      for (std::ptrdiff_t i = -r; i <= r; ++i) {
        acc += k[static_cast<std::size_t>(i + r)] *
               tmp.at(x, clamp_index(static_cast<std::ptrdiff_t>(y) + i, h));
      }
      out.at(x, y) = acc;
    }
  }
  return out;
}

bool in_sharp_region(SplitGeometry g, std::size_t x, std::size_t y, std::size_t width,
                     std::size_t height) {
  switch (g) {
    case SplitGeometry::vertical: return x < (width + 1) / 2;
    case SplitGeometry::horizontal: return y < (height + 1) / 2;
    case SplitGeometry::diag_main: return x * height < y * width;
    case SplitGeometry::diag_anti: return (width - 1 - x) * height < y * width;
  }
  return false;
}

FocusPair make_pair(const GrayImage& original, SplitGeometry geometry, double sigma,
                    std::size_t radius) {
  if (original.width() < 2 || original.height() < 2) {
    throw Error(ErrorCode::invalid_argument, "focus pairs need an original of at least 2x2");
  }
  const GrayImage blurred = gaussian_blur(original, sigma, radius);
  GrayImage a = original;
  GrayImage b = original;
  for (std::size_t y = 0; y < original.height(); ++y) {
    for (std::size_t x = 0; x < original.width(); ++x) {
      if (in_sharp_region(geometry, x, y, original.width(), original.height())) {
        b.at(x, y) = blurred.at(x, y);
      } else {
        a.at(x, y) = blurred.at(x, y);
      }
    }
  }
  return FocusPair{std::move(a), std::move(b), original, geometry, sigma, radius};
}

}  // namespace mff
