// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mff/image.hpp"

namespace mff {

/// Real-valued coefficient raster, row-major.
struct Band {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<double> data;

  double at(std::size_t x, std::size_t y) const { return data[y * width + x]; }
  double& at(std::size_t x, std::size_t y) { return data[y * width + x]; }
};

struct WaveletLevel {
  Band horizontal;  // row high-pass, column low-pass
  Band vertical;    // row low-pass, column high-pass
  Band diagonal;
};

/// Orthonormal Haar decomposition. levels[0] is the finest scale.
struct WaveletPyramid {
  std::vector<WaveletLevel> levels;
  Band approximation;
  std::size_t original_width = 0;
  std::size_t original_height = 0;
  std::size_t padded_width = 0;
  std::size_t padded_height = 0;
};

inline constexpr std::size_t kDefaultWaveletLevels = 3;

GrayImage fuse_average(std::span<const GrayImage> images);

struct PcaFusion {
  GrayImage image;
  std::vector<double> weights;    // non-negative, sum to 1
  bool fell_back_to_average = false;  // all inputs constant
};

/// Weights inputs by the normalized magnitudes of the dominant eigenvector of
/// their N x N inter-image covariance.
PcaFusion fuse_pca(std::span<const GrayImage> images);

/// Edge-replicates the image up to the next multiple of `multiple` per axis.
GrayImage pad_replicate(const GrayImage& img, std::size_t multiple);

WaveletPyramid haar_dwt(const GrayImage& img, std::size_t levels);
GrayImage haar_idwt(const WaveletPyramid& pyr);

/// Max-absolute detail coefficients (ties to the lowest input index), mean
/// approximation, then reconstruction. The result is not clamped.
GrayImage fuse_wavelet(std::span<const GrayImage> images,
                       std::size_t levels = kDefaultWaveletLevels);

}  // namespace mff
