// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mff {

/// Single-channel raster, row-major, double samples on the nominal [0, 255] scale.
/// Every sample is finite; quantization to 8 bits happens only when encoding.
class GrayImage {
 public:
  GrayImage(std::size_t width, std::size_t height, double fill = 0.0);
  GrayImage(std::size_t width, std::size_t height, std::vector<double> samples);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return samples_.size(); }

  double at(std::size_t x, std::size_t y) const { return samples_[y * width_ + x]; }
  double& at(std::size_t x, std::size_t y) { return samples_[y * width_ + x]; }

  std::span<const double> samples() const noexcept { return samples_; }
  std::span<double> samples() noexcept { return samples_; }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<double> samples_;
};

struct PixelRect {
  std::size_t x0 = 0;
  std::size_t y0 = 0;
  std::size_t w = 1;
  std::size_t h = 1;

  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

enum class PgmMode { ascii, binary };

/// Decodes a P2 or P5 stream. Samples are rescaled by 255/maxval.
/// Throws ParseError carrying the byte offset of the failure.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

/// Encodes with maxval 255; samples are clamped to [0, 255] and rounded half-up.
std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmMode mode);

GrayImage read_pgm_file(const char* path);
void write_pgm_file(const GrayImage& img, const char* path, PgmMode mode);

/// The byte value a sample encodes to.
std::uint8_t quantize_sample(double v) noexcept;

/// Copy with every sample replaced by its encoded 8-bit value.
GrayImage quantize(const GrayImage& img);

GrayImage extract(const GrayImage& img, const PixelRect& rect);

/// Throws dimension_mismatch unless every image shares the first one's shape.
void require_same_shape(std::span<const GrayImage> images);

}  // namespace mff
