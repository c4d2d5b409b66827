// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mff/image.hpp"

namespace mff {

/// Disjoint tiling of a width x height raster into k x k windows. The last
/// column and row of blocks keep whatever remains (narrower or shorter).
struct BlockGrid {
  std::size_t k = 1;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<PixelRect> rects;  // row-major over blocks

  const PixelRect& rect(std::size_t bx, std::size_t by) const { return rects[by * nx + bx]; }
};

struct StdMap {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<double> values;
};

/// Standard deviation with the n - 1 divisor. A single value has std 0.
double sample_std(std::span<const double> values);

BlockGrid partition(std::size_t width, std::size_t height, std::size_t k);

/// sample_std over the pixels of one rect, without copying them out.
double block_std(const GrayImage& img, const PixelRect& rect);

StdMap block_std_map(const GrayImage& img, const BlockGrid& grid);

}  // namespace mff
