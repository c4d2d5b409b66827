// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "mff/mff.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "mff/baselines.hpp"
#include "mff/error.hpp"
#include "mff/fusion.hpp"
#include "mff/image.hpp"
#include "mff/metrics.hpp"
#include "mff/synth.hpp"
#include "mff/window_stats.hpp"

struct mff_image {
  mff::GrayImage value;
};

struct mff_selection {
  mff::SelectionMap value;
};

namespace {

thread_local std::string last_error;

mff_status fail(mff_status status, const std::string& message) {
  last_error = message;
  return status;
}

mff_status to_status(mff::ErrorCode code) {
  switch (code) {
    case mff::ErrorCode::invalid_argument: return MFF_ERR_INVALID_ARGUMENT;
    case mff::ErrorCode::dimension_mismatch: return MFF_ERR_DIMENSION_MISMATCH;
    case mff::ErrorCode::parse: return MFF_ERR_PARSE;
    case mff::ErrorCode::io: return MFF_ERR_IO;
    case mff::ErrorCode::degenerate: return MFF_ERR_DEGENERATE;
  }
  return MFF_ERR_INTERNAL;
}

template <typename F>
mff_status guarded(F&& body) {
  try {
    body();
    return MFF_OK;
  } catch (const mff::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MFF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MFF_ERR_INTERNAL, e.what());
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw mff::Error(mff::ErrorCode::invalid_argument, what);
}

mff_image* wrap(mff::GrayImage img) { return new mff_image{std::move(img)}; }

std::vector<mff::GrayImage> gather(const mff_image* const* images, size_t count) {
  require(images != nullptr || count == 0, "image array is null");
  std::vector<mff::GrayImage> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    require(images[i] != nullptr, "image handle is null");
    out.push_back(images[i]->value);
  }
  return out;
}

}  // namespace

extern "C" {

const char* mff_version(void) { return "1.0.0"; }

const char* mff_status_name(mff_status status) {
  switch (status) {
    case MFF_OK: return "ok";
    case MFF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MFF_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case MFF_ERR_PARSE: return "parse error";
    case MFF_ERR_IO: return "i/o error";
    case MFF_ERR_DEGENERATE: return "degenerate input";
    case MFF_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case MFF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mff_last_error(void) { return last_error.c_str(); }

mff_status mff_image_create(size_t width, size_t height, const double* samples, mff_image** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    require(samples != nullptr, "sample buffer is null");
    require(width > 0 && height > 0 && width <= SIZE_MAX / height, "invalid image dimensions");
    *out = wrap(mff::GrayImage(width, height, std::vector<double>(samples, samples + width * height)));
  });
}

mff_status mff_image_clone(const mff_image* img, mff_image** out) {
  return guarded([&] {
    require(img != nullptr && out != nullptr, "null handle");
    *out = wrap(img->value);
  });
}

void mff_image_destroy(mff_image* img) { delete img; }

size_t mff_image_width(const mff_image* img) { return img ? img->value.width() : 0; }
size_t mff_image_height(const mff_image* img) { return img ? img->value.height() : 0; }
const double* mff_image_samples(const mff_image* img) {
  return img ? img->value.samples().data() : nullptr;
}

mff_status mff_pgm_decode(const uint8_t* bytes, size_t len, mff_image** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    require(bytes != nullptr || len == 0, "byte buffer is null");
    *out = wrap(mff::load_pgm(std::span<const std::uint8_t>(bytes, len)));
  });
}

mff_status mff_pgm_encode(const mff_image* img, mff_pgm_mode mode, uint8_t* dst, size_t capacity,
                          size_t* written) {
  bool too_small = false;
  const mff_status st = guarded([&] {
    require(img != nullptr && written != nullptr, "null argument");
    const auto bytes =
        mff::save_pgm(img->value, mode == MFF_PGM_BINARY ? mff::PgmMode::binary : mff::PgmMode::ascii);
    *written = bytes.size();
    if (dst == nullptr) return;
    if (capacity < bytes.size()) {
      too_small = true;
      return;
    }
    std::memcpy(dst, bytes.data(), bytes.size());
  });
  if (st == MFF_OK && too_small) {
    return fail(MFF_ERR_BUFFER_TOO_SMALL, "encode buffer is smaller than " + std::to_string(*written) + " bytes");
  }
  return st;
}

mff_status mff_pgm_read_file(const char* path, mff_image** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = wrap(mff::read_pgm_file(path));
  });
}

mff_status mff_pgm_write_file(const mff_image* img, const char* path, mff_pgm_mode mode) {
  return guarded([&] {
    require(img != nullptr && path != nullptr, "null argument");
    mff::write_pgm_file(img->value, path,
                        mode == MFF_PGM_BINARY ? mff::PgmMode::binary : mff::PgmMode::ascii);
  });
}

mff_status mff_image_quantize(const mff_image* img, mff_image** out) {
  return guarded([&] {
    require(img != nullptr && out != nullptr, "null handle");
    *out = wrap(mff::quantize(img->value));
  });
}

mff_status mff_image_extract(const mff_image* img, size_t x0, size_t y0, size_t w, size_t h,
                             mff_image** out) {
  return guarded([&] {
    require(img != nullptr && out != nullptr, "null handle");
    *out = wrap(mff::extract(img->value, {x0, y0, w, h}));
  });
}

mff_status mff_sample_std(const double* values, size_t count, double* out) {
  return guarded([&] {
    require(out != nullptr && (values != nullptr || count == 0), "null argument");
    *out = mff::sample_std(std::span<const double>(values, count));
  });
}

mff_status mff_block_std_map(const mff_image* img, size_t k, double* dst, size_t capacity,
                             size_t* nx, size_t* ny) {
  bool too_small = false;
  const mff_status st = guarded([&] {
    require(img != nullptr && nx != nullptr && ny != nullptr, "null argument");
    const auto grid = mff::partition(img->value.width(), img->value.height(), k);
    *nx = grid.nx;
    *ny = grid.ny;
    if (dst == nullptr) return;
    if (capacity < grid.rects.size()) {
      too_small = true;
      return;
    }
    const auto map = mff::block_std_map(img->value, grid);
    std::copy(map.values.begin(), map.values.end(), dst);
  });
  if (st == MFF_OK && too_small) return fail(MFF_ERR_BUFFER_TOO_SMALL, "std map buffer too small");
  return st;
}

mff_status mff_fuse_max_std(const mff_image* const* images, size_t count, size_t k,
                            mff_tie_break tie_break, mff_image** fused, mff_selection** selection) {
  return guarded([&] {
    require(fused != nullptr, "output handle is null");
    const auto stack = gather(images, count);
    auto result = mff::fuse_max_std(stack, k,
                                    tie_break == MFF_TIE_HIGHEST_INDEX ? mff::TieBreak::highest_index
                                                                       : mff::TieBreak::lowest_index);
    mff_image* img = wrap(std::move(result.image));
    if (selection != nullptr) {
      try {
        *selection = new mff_selection{std::move(result.selection)};
      } catch (...) {
        delete img;
        throw;
      }
    }
    *fused = img;
  });
}

void mff_selection_destroy(mff_selection* sel) { delete sel; }
size_t mff_selection_nx(const mff_selection* sel) { return sel ? sel->value.nx : 0; }
size_t mff_selection_ny(const mff_selection* sel) { return sel ? sel->value.ny : 0; }
size_t mff_selection_k(const mff_selection* sel) { return sel ? sel->value.k : 0; }
const size_t* mff_selection_indices(const mff_selection* sel) {
  static_assert(sizeof(size_t) == sizeof(std::size_t));
  return sel ? sel->value.source_index.data() : nullptr;
}

mff_status mff_selection_render(const mff_selection* sel, size_t inputs, mff_image** out) {
  return guarded([&] {
    require(sel != nullptr && out != nullptr, "null handle");
    *out = wrap(mff::selection_to_image(sel->value, inputs));
  });
}

mff_status mff_fuse_average(const mff_image* const* images, size_t count, mff_image** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = wrap(mff::fuse_average(gather(images, count)));
  });
}

mff_status mff_fuse_pca(const mff_image* const* images, size_t count, mff_image** out,
                        double* weights, int* fell_back) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    auto result = mff::fuse_pca(gather(images, count));
    if (weights != nullptr) std::copy(result.weights.begin(), result.weights.end(), weights);
    if (fell_back != nullptr) *fell_back = result.fell_back_to_average ? 1 : 0;
    *out = wrap(std::move(result.image));
  });
}

mff_status mff_fuse_wavelet(const mff_image* const* images, size_t count, size_t levels,
                            mff_image** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = wrap(mff::fuse_wavelet(gather(images, count), levels));
  });
}

mff_status mff_rmse(const mff_image* a, const mff_image* b, double* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = mff::rmse(a->value, b->value);
  });
}

mff_status mff_psnr(const mff_image* a, const mff_image* b, double* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = mff::psnr(a->value, b->value);
  });
}

mff_status mff_uqi(const mff_image* a, const mff_image* b, size_t window, double* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = mff::uqi(a->value, b->value, window);
  });
}

mff_status mff_ssim(const mff_image* a, const mff_image* b, double* out) {
  return guarded([&] {
    require(a != nullptr && b != nullptr && out != nullptr, "null argument");
    *out = mff::ssim(a->value, b->value);
  });
}

mff_status mff_ssim_to_inputs(const mff_image* fused, const mff_image* const* inputs, size_t count,
                              double* mean, double* per_input) {
  return guarded([&] {
    require(fused != nullptr && mean != nullptr, "null argument");
    const auto result = mff::ssim_to_inputs(fused->value, gather(inputs, count));
    *mean = result.mean;
    if (per_input != nullptr) std::copy(result.per_input.begin(), result.per_input.end(), per_input);
  });
}

mff_status mff_gaussian_blur(const mff_image* img, double sigma, size_t radius, mff_image** out) {
  return guarded([&] {
    require(img != nullptr && out != nullptr, "null handle");
    *out = wrap(mff::gaussian_blur(img->value, sigma, radius));
  });
}

mff_status mff_make_pair(const mff_image* original, mff_geometry geometry, double sigma,
                         size_t radius, mff_image** input_a, mff_image** input_b) {
  return guarded([&] {
    require(original != nullptr && input_a != nullptr && input_b != nullptr, "null handle");
    require(geometry >= MFF_SPLIT_VERTICAL && geometry <= MFF_SPLIT_DIAG_ANTI, "unknown split geometry");
    auto pair = mff::make_pair(original->value, static_cast<mff::SplitGeometry>(geometry), sigma, radius);
    auto a = std::make_unique<mff_image>(mff_image{std::move(pair.input_a)});
    auto b = std::make_unique<mff_image>(mff_image{std::move(pair.input_b)});
    *input_a = a.release();
    *input_b = b.release();
  });
}

}  // extern "C"
