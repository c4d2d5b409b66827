// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "mff/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "mff/error.hpp"

namespace mff {

GrayImage::GrayImage(std::size_t width, std::size_t height, double fill)
    : GrayImage(width, height, std::vector<double>(width * height, fill)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<double> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width == 0 || height == 0) {
    throw Error(ErrorCode::invalid_argument, "image dimensions must be at least 1x1");
  }
  if (samples_.size() != width * height) {
    throw Error(ErrorCode::invalid_argument,
                "sample count " + std::to_string(samples_.size()) + " does not match " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::invalid_argument, "image sample is not finite");
  }
}

namespace {

constexpr std::uint64_t kTokenLimit = 1'000'000'000;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class PgmReader {
 public:
  explicit PgmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= bytes_.size(); }
  std::uint8_t peek() const { return bytes_[pos_]; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  void advance(std::size_t n) { pos_ += n; }

  void skip_space_and_comments() {
    while (!at_end()) {
      if (is_space(peek())) {
        ++pos_;
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n' && peek() != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  std::uint64_t number(const char* what) {
    if (at_end()) throw ParseError(pos_, std::string("truncated data: missing ") + what);
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && !is_space(peek())) {
      const std::uint8_t c = peek();
      if (c < '0' || c > '9') {
        throw ParseError(pos_, std::string("non-numeric token for ") + what);
      }
      value = value * 10 + (c - '0');
      if (value > kTokenLimit) throw ParseError(start, std::string(what) + " is too large");
      ++pos_;
    }
    return value;
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw ParseError(0, "unknown magic (expected P2 or P5)");
  }
  const bool binary = bytes[1] == '5';
  PgmReader in(bytes);
  in.advance(2);
  if (!in.at_end() && !is_space(in.peek()) && in.peek() != '#') {
    throw ParseError(2, "unknown magic (expected P2 or P5)");
  }

  in.skip_space_and_comments();
  const std::size_t width_at = in.pos();
  const auto width = in.number("width");
  in.skip_space_and_comments();
  const std::size_t height_at = in.pos();
  const auto height = in.number("height");
  in.skip_space_and_comments();
  const std::size_t maxval_at = in.pos();
  const auto maxval = in.number("maxval");

  if (width == 0) throw ParseError(width_at, "width must be at least 1");
  if (height == 0) throw ParseError(height_at, "height must be at least 1");
  if (maxval < 1 || maxval > 65535) throw ParseError(maxval_at, "maxval outside [1, 65535]");

  const std::uint64_t count = width * height;
  const double scale = 255.0 / static_cast<double>(maxval);
  std::vector<double> samples;

  if (binary) {
    if (in.at_end()) throw ParseError(in.pos(), "truncated data: missing raster");
    in.advance(1);  // the single whitespace byte after maxval
    const std::uint64_t bytes_per = maxval > 255 ? 2 : 1;
    if (in.remaining() / bytes_per < count) {
      throw ParseError(bytes.size(), "truncated data: expected " + std::to_string(count) +
                                         " samples, found " +
                                         std::to_string(in.remaining() / bytes_per));
    }
    samples.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::size_t at = in.pos();
      std::uint32_t v = bytes[at];
      if (bytes_per == 2) v = (v << 8) | bytes[at + 1];
      if (v > maxval) throw ParseError(at, "sample exceeds maxval");
      samples[i] = v * scale;
      in.advance(bytes_per);
    }
  } else {
    samples.reserve(std::min<std::uint64_t>(count, bytes.size()));
    for (std::uint64_t i = 0; i < count; ++i) {
      in.skip_space();
      if (in.at_end()) {
        throw ParseError(in.pos(), "truncated data: expected " + std::to_string(count) +
                                       " samples, found " + std::to_string(i));
      }
      const std::size_t at = in.pos();
      const auto v = in.number("sample");
      if (v > maxval) throw ParseError(at, "sample exceeds maxval");
      samples.push_back(static_cast<double>(v) * scale);
    }
  }
  return GrayImage(width, height, std::move(samples));
}

std::uint8_t quantize_sample(double v) noexcept {
  const double clamped = std::clamp(v, 0.0, 255.0);
  return static_cast<std::uint8_t>(std::floor(clamped + 0.5));
}

GrayImage quantize(const GrayImage& img) {
  GrayImage out = img;
  for (double& v : out.samples()) v = quantize_sample(v);
  return out;
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmMode mode) {
  const std::string header = std::string(mode == PgmMode::binary ? "P5" : "P2") + "\n" +
                             std::to_string(img.width()) + " " + std::to_string(img.height()) +
                             "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (mode == PgmMode::binary) {
    out.reserve(out.size() + img.size());
    for (double v : img.samples()) out.push_back(quantize_sample(v));
    return out;
  }
  // Netpbm asks for lines of at most 70 characters; rows also start a new line.
  for (std::size_t y = 0; y < img.height(); ++y) {
    std::size_t line = 0;
    for (std::size_t x = 0; x < img.width(); ++x) {
      const std::string token = std::to_string(quantize_sample(img.at(x, y)));
      if (line > 0 && line + 1 + token.size() > 70) {
        out.push_back('\n');
        line = 0;
      } else if (line > 0) {
        out.push_back(' ');
        ++line;
      }
      out.insert(out.end(), token.begin(), token.end());
      line += token.size();
    }
    out.push_back('\n');
  }
  return out;
}

GrayImage read_pgm_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open file");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::io, "read failed");
  return load_pgm(bytes);
}

void write_pgm_file(const GrayImage& img, const char* path, PgmMode mode) {
  const auto bytes = save_pgm(img, mode);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot create file");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error(ErrorCode::io, "write failed");
}

GrayImage extract(const GrayImage& img, const PixelRect& rect) {
  if (rect.w == 0 || rect.h == 0 || rect.x0 > img.width() || rect.y0 > img.height() ||
      rect.w > img.width() - rect.x0 || rect.h > img.height() - rect.y0) {
    throw Error(ErrorCode::invalid_argument, "rect out of bounds");
  }
  std::vector<double> out;
  out.reserve(rect.w * rect.h);
  for (std::size_t y = rect.y0; y < rect.y0 + rect.h; ++y) {
    const auto row = img.samples().subspan(y * img.width() + rect.x0, rect.w);
    out.insert(out.end(), row.begin(), row.end());
  }
  return GrayImage(rect.w, rect.h, std::move(out));
}

void require_same_shape(std::span<const GrayImage> images) {
  for (const auto& img : images) {
    if (!img.same_shape(images.front())) {
      throw Error(ErrorCode::dimension_mismatch,
                  "image dimensions differ: " + std::to_string(images.front().width()) + "x" +
                      std::to_string(images.front().height()) + " vs " +
                      std::to_string(img.width()) + "x" + std::to_string(img.height()));
    }
  }
}

}  // namespace mff
