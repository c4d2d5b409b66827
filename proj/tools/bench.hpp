// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "handles.hpp"
#include "mff/mff.h"

namespace mff::cli {

struct BenchOptions {
  std::vector<std::string> originals;
  std::vector<mff_geometry> geometries;
  double sigma = 2.0;
  std::size_t radius = 6;
  std::size_t k = 2;
  std::size_t levels = 3;
  bool identical = false;  // degenerate run: both inputs are the original
  bool timing = false;
};

struct BenchRow {
  std::string image;
  std::string method;
  std::size_t k = 0;
  std::string geometry;
  double sigma = 0.0;
  double ssim_inputs = 0.0;
  double psnr = 0.0;
  double rmse = 0.0;
  double runtime_ms = 0.0;
};

inline constexpr const char* kBenchMethods[] = {"proposed", "wavelet", "pca", "average"};

bool is_method(const std::string& name);

/// Dispatches to one fusion method. `selection` is filled for "proposed" only.
Image run_method(const std::string& method, const std::vector<Image>& inputs, std::size_t k,
                 mff_tie_break tie_break, std::size_t levels, Selection* selection = nullptr);

std::vector<BenchRow> run_bench(const BenchOptions& opts);

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing);
std::string bench_markdown(const std::vector<BenchRow>& rows);

}  // namespace mff::cli
