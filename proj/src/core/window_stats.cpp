// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "mff/window_stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mff/error.hpp"

namespace mff {

double sample_std(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::invalid_argument, "sample_std of an empty sequence");
  const std::size_t n = values.size();
  if (n == 1) return 0.0;
  double sum = 0.0;
  bool flat = true;
  for (double v : values) {
    sum += v;
    flat = flat && v == values[0];
  }
  if (flat) return 0.0;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

BlockGrid partition(std::size_t width, std::size_t height, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::invalid_argument, "window size k must be at least 1");
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::invalid_argument, "cannot partition an empty raster");
  }
  BlockGrid grid;
  grid.k = k;
  grid.width = width;
  grid.height = height;
  grid.nx = (width + k - 1) / k;
  grid.ny = (height + k - 1) / k;
  grid.rects.reserve(grid.nx * grid.ny);
  for (std::size_t by = 0; by < grid.ny; ++by) {
    const std::size_t y0 = by * k;
    const std::size_t h = std::min(k, height - y0);
    for (std::size_t bx = 0; bx < grid.nx; ++bx) {
      const std::size_t x0 = bx * k;
      grid.rects.push_back({x0, y0, std::min(k, width - x0), h});
    }
  }
  return grid;
}

double block_std(const GrayImage& img, const PixelRect& r) {
  const std::size_t n = r.w * r.h;
  if (n == 1) return 0.0;
  const double first = img.at(r.x0, r.y0);
  double sum = 0.0;
  bool flat = true;
  for (std::size_t y = r.y0; y < r.y0 + r.h; ++y) {
    for (std::size_t x = r.x0; x < r.x0 + r.w; ++x) {
      sum += img.at(x, y);
      flat = flat && img.at(x, y) == first;
    }
  }
  if (flat) return 0.0;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t y = r.y0; y < r.y0 + r.h; ++y) {
    for (std::size_t x = r.x0; x < r.x0 + r.w; ++x) {
      const double d = img.at(x, y) - mean;
      ss += d * d;
    }
  }
  return std::sqrt(ss / static_cast<double>(n - 1));
}

StdMap block_std_map(const GrayImage& img, const BlockGrid& grid) {
  if (grid.width != img.width() || grid.height != img.height()) {
    throw Error(ErrorCode::dimension_mismatch,
                "grid built for " + std::to_string(grid.width) + "x" + std::to_string(grid.height) +
                    " applied to " + std::to_string(img.width()) + "x" +
                    std::to_string(img.height()));
  }
  StdMap map{grid.nx, grid.ny, {}};
  map.values.reserve(grid.rects.size());
  for (const auto& r : grid.rects) map.values.push_back(block_std(img, r));
  return map;
}

}  // namespace mff
