// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

// Deterministic image generators shared by the test binaries.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "mff/image.hpp"

namespace mff::testing {

inline GrayImage random_image(std::size_t w, std::size_t h, std::mt19937_64& rng, double lo = 0.0,
                              double hi = 255.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> s(w * h);
  for (double& v : s) v = dist(rng);
  return GrayImage(w, h, std::move(s));
}

inline GrayImage random_integer_image(std::size_t w, std::size_t h, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(0, 255);
  std::vector<double> s(w * h);
  for (double& v : s) v = dist(rng);
  return GrayImage(w, h, std::move(s));
}

inline GrayImage constant_image(std::size_t w, std::size_t h, double c) { return GrayImage(w, h, c); }

/// Natural-looking test scene: smooth shading plus gratings of several
/// orientations and a layer of fine grain, quantized to 8 bits.
inline GrayImage textured_image(std::size_t w, std::size_t h, unsigned seed = 7, double grain_sigma = 18.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 6.283185307179586);
  std::normal_distribution<double> grain(0.0, grain_sigma);
  struct Wave {
    double fx, fy, amp, ph;
  };
  const std::vector<Wave> waves = {
      {0.011, 0.004, 40.0, phase(rng)}, {0.090, 0.031, 22.0, phase(rng)},
      {-0.047, 0.160, 18.0, phase(rng)}, {0.230, -0.120, 14.0, phase(rng)},
      {0.310, 0.270, 10.0, phase(rng)},
  };
  std::vector<double> s(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double v = 128.0 + 30.0 * (static_cast<double>(x) / w - 0.5);
      for (const auto& wv : waves) {
        v += wv.amp * std::sin(6.283185307179586 * (wv.fx * x + wv.fy * y) + wv.ph);
      }
      v += grain(rng);
      s[y * w + x] = std::floor(std::clamp(v, 0.0, 255.0) + 0.5);
    }
  }
  return GrayImage(w, h, std::move(s));
}

inline GrayImage transpose(const GrayImage& img) {
  GrayImage out(img.height(), img.width());
  for (std::size_t y = 0; y < img.height(); ++y)
    for (std::size_t x = 0; x < img.width(); ++x) out.at(y, x) = img.at(x, y);
  return out;
}

inline GrayImage scaled(const GrayImage& img, double c, double offset = 0.0) {
  GrayImage out = img;
  for (double& v : out.samples()) v = c * v + offset;
  return out;
}

}  // namespace mff::testing
