// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

// RAII ownership for C API handles.

#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mff/mff.h"

namespace mff::cli {

struct ImageDeleter {
  void operator()(mff_image* p) const noexcept { mff_image_destroy(p); }
};
struct SelectionDeleter {
  void operator()(mff_selection* p) const noexcept { mff_selection_destroy(p); }
};

using Image = std::unique_ptr<mff_image, ImageDeleter>;
using Selection = std::unique_ptr<mff_selection, SelectionDeleter>;

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check(mff_status status, std::string_view context) {
  if (status != MFF_OK) throw CliError(std::string(context) + ": " + mff_last_error());
}

inline Image read_image(const std::string& path) {
  mff_image* raw = nullptr;
  check(mff_pgm_read_file(path.c_str(), &raw), "reading " + path);
  return Image(raw);
}

inline void write_image(const Image& img, const std::string& path, bool ascii) {
  check(mff_pgm_write_file(img.get(), path.c_str(), ascii ? MFF_PGM_ASCII : MFF_PGM_BINARY),
        "writing " + path);
}

inline Image quantized(const Image& img) {
  mff_image* raw = nullptr;
  check(mff_image_quantize(img.get(), &raw), "quantize");
  return Image(raw);
}

inline std::vector<const mff_image*> borrow(const std::vector<Image>& images) {
  std::vector<const mff_image*> out;
  out.reserve(images.size());
  for (const auto& img : images) out.push_back(img.get());
  return out;
}

}  // namespace mff::cli
