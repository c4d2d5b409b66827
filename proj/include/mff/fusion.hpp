// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mff/image.hpp"

namespace mff {

enum class TieBreak { lowest_index, highest_index };

/// Which input supplied each block of a fused image.
struct SelectionMap {
  std::size_t k = 1;
  std::size_t width = 0;  // fused image dims
  std::size_t height = 0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<std::size_t> source_index;  // row-major over blocks
};

struct FusedResult {
  GrayImage image;
  SelectionMap selection;
  std::size_t k;
  TieBreak tie_break;
  std::size_t inputs;
};

inline constexpr std::size_t kDefaultWindow = 2;

/// Block-wise maximum standard deviation fusion.
///
/// The images are tiled into k x k windows. For every window the input with
/// the largest sample std wins and its pixels are copied into the output
/// verbatim. Equal stds resolve according to `tie_break`. Requires at least
/// two co-registered images of identical size.
FusedResult fuse_max_std(std::span<const GrayImage> images, std::size_t k = kDefaultWindow,
                         TieBreak tie_break = TieBreak::lowest_index);

/// Renders the selection as flat blocks of round(255 * index / max(N - 1, 1)).
GrayImage selection_to_image(const SelectionMap& sel, std::size_t inputs);

}  // namespace mff
