// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "mff/fusion.hpp"

#include <algorithm>
#include <cmath>

#include "mff/error.hpp"
#include "mff/window_stats.hpp"

namespace mff {

FusedResult fuse_max_std(std::span<const GrayImage> images, std::size_t k, TieBreak tie_break) {
  if (images.size() < 2) throw Error(ErrorCode::invalid_argument, "fusion needs at least 2 images");
  require_same_shape(images);
  const BlockGrid grid = partition(images.front().width(), images.front().height(), k);

  SelectionMap sel{k, grid.width, grid.height, grid.nx, grid.ny, {}};
  sel.source_index.resize(grid.rects.size());
  GrayImage out(grid.width, grid.height);

  for (std::size_t b = 0; b < grid.rects.size(); ++b) {
    const PixelRect& r = grid.rects[b];
    std::size_t best = 0;
    double best_std = block_std(images[0], r);
    for (std::size_t i = 1; i < images.size(); ++i) {
      const double s = block_std(images[i], r);
      if (s > best_std || (tie_break == TieBreak::highest_index && s == best_std)) {
        best = i;
        best_std = s;
      }
    }
    sel.source_index[b] = best;
    const GrayImage& src = images[best];
    for (std::size_t y = r.y0; y < r.y0 + r.h; ++y)
      for (std::size_t x = r.x0; x < r.x0 + r.w; ++x) out.at(x, y) = src.at(x, y);
  }
  return FusedResult{std::move(out), std::move(sel), k, tie_break, images.size()};
}

GrayImage selection_to_image(const SelectionMap& sel, std::size_t inputs) {
  if (inputs == 0) throw Error(ErrorCode::invalid_argument, "selection rendering needs N >= 1");
  const BlockGrid grid = partition(sel.width, sel.height, sel.k);
  if (grid.nx != sel.nx || grid.ny != sel.ny || sel.source_index.size() != grid.rects.size()) {
    throw Error(ErrorCode::dimension_mismatch, "selection map is inconsistent with its grid");
  }
  const double denom = static_cast<double>(std::max<std::size_t>(inputs - 1, 1));
  GrayImage out(sel.width, sel.height);
  for (std::size_t b = 0; b < grid.rects.size(); ++b) {
    const double level = std::floor(255.0 * static_cast<double>(sel.source_index[b]) / denom + 0.5);
    const PixelRect& r = grid.rects[b];
    for (std::size_t y = r.y0; y < r.y0 + r.h; ++y)
      for (std::size_t x = r.x0; x < r.x0 + r.w; ++x) out.at(x, y) = level;
  }
  return out;
}

}  // namespace mff
