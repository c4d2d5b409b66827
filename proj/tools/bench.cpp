// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <tuple>

namespace mff::cli {

namespace {

const char* geometry_label(mff_geometry g) {
  switch (g) {
    case MFF_SPLIT_VERTICAL: return "vertical";
    case MFF_SPLIT_HORIZONTAL: return "horizontal";
    case MFF_SPLIT_DIAG_MAIN: return "diag_main";
    case MFF_SPLIT_DIAG_ANTI: return "diag_anti";
  }
  return "unknown";
}

std::string fixed4(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

bool is_method(const std::string& name) {
  return std::find(std::begin(kBenchMethods), std::end(kBenchMethods), name) != std::end(kBenchMethods);
}

Image run_method(const std::string& method, const std::vector<Image>& inputs, std::size_t k,
                 mff_tie_break tie_break, std::size_t levels, Selection* selection) {
  const auto stack = borrow(inputs);
  mff_image* out = nullptr;
  if (method == "proposed") {
    mff_selection* sel = nullptr;
    check(mff_fuse_max_std(stack.data(), stack.size(), k, tie_break, &out,
                           selection != nullptr ? &sel : nullptr),
          "fuse");
    if (selection != nullptr) selection->reset(sel);
  } else if (method == "wavelet") {
    check(mff_fuse_wavelet(stack.data(), stack.size(), levels, &out), "fuse");
  } else if (method == "pca") {
    check(mff_fuse_pca(stack.data(), stack.size(), &out, nullptr, nullptr), "fuse");
  } else if (method == "average") {
    check(mff_fuse_average(stack.data(), stack.size(), &out), "fuse");
  } else {
    throw CliError("unknown method '" + method + "'");
  }
  return Image(out);
}

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  if (opts.originals.empty()) throw CliError("bench needs at least one original image");
  std::vector<BenchRow> rows;
  for (const auto& path : opts.originals) {
    const Image original = read_image(path);
    const std::string name = std::filesystem::path(path).stem().string();

    std::vector<std::pair<std::string, std::vector<Image>>> pairs;
    if (opts.identical) {
      std::vector<Image> inputs;
      inputs.push_back(quantized(original));
      inputs.push_back(quantized(original));
      pairs.emplace_back("identical", std::move(inputs));
    } else {
      for (mff_geometry g : opts.geometries) {
        mff_image* a = nullptr;
        mff_image* b = nullptr;
        check(mff_make_pair(original.get(), g, opts.sigma, opts.radius, &a, &b), "synth " + name);
        const Image ia(a);
        const Image ib(b);
        std::vector<Image> inputs;
        inputs.push_back(quantized(ia));
        inputs.push_back(quantized(ib));
        pairs.emplace_back(geometry_label(g), std::move(inputs));
      }
    }

    for (const auto& [geometry, inputs] : pairs) {
      const auto stack = borrow(inputs);
      for (const char* method : kBenchMethods) {
        const auto start = std::chrono::steady_clock::now();
        const Image fused = run_method(method, inputs, opts.k, MFF_TIE_LOWEST_INDEX, opts.levels);
        const auto stop = std::chrono::steady_clock::now();
        const Image stored = quantized(fused);

        BenchRow row;
        row.image = name;
        row.method = method;
        row.k = opts.k;
        row.geometry = geometry;
        row.sigma = opts.identical ? 0.0 : opts.sigma;
        row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        check(mff_ssim_to_inputs(stored.get(), stack.data(), stack.size(), &row.ssim_inputs, nullptr),
              "ssim " + name);
        check(mff_psnr(stored.get(), original.get(), &row.psnr), "psnr " + name);
        check(mff_rmse(stored.get(), original.get(), &row.rmse), "rmse " + name);
        rows.push_back(std::move(row));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.image, a.geometry, a.method) < std::tie(b.image, b.geometry, b.method);
  });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows, bool timing) {
  std::ostringstream out;
  out << "image,method,k,geometry,sigma,ssim_inputs,psnr,rmse,runtime_ms\n";
  for (const auto& r : rows) {
    out << r.image << ',' << r.method << ',' << r.k << ',' << r.geometry << ',' << fixed4(r.sigma)
        << ',' << fixed4(r.ssim_inputs) << ',' << fixed4(r.psnr) << ',' << fixed4(r.rmse) << ','
        << (timing ? fixed4(r.runtime_ms) : std::string("na")) << '\n';
  }
  return out.str();
}

std::string bench_markdown(const std::vector<BenchRow>& rows) {
  // Column order follows the usual comparison layout, with the average floor last.
  static constexpr const char* columns[] = {"wavelet", "pca", "proposed", "average"};
  std::map<std::pair<std::string, std::string>, std::map<std::string, const BenchRow*>> table;
  for (const auto& r : rows) table[{r.image, r.geometry}][r.method] = &r;

  std::ostringstream out;
  const auto emit = [&](const char* title, double BenchRow::*field) {
    out << "## " << title << "\n\n| image |";
    for (const char* c : columns) out << ' ' << c << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < std::size(columns); ++i) out << "---:|";
    out << '\n';
    for (const auto& [key, methods] : table) {
      out << "| " << key.first << " (" << key.second << ") |";
      for (const char* c : columns) {
        const auto it = methods.find(c);
        out << ' ' << (it == methods.end() ? std::string("-") : fixed4(it->second->*field)) << " |";
      }
      out << '\n';
    }
    out << '\n';
  };

  out << "# Fusion benchmark\n\n";
  emit("SSIM to inputs", &BenchRow::ssim_inputs);
  emit("PSNR vs original (dB)", &BenchRow::psnr);
  emit("RMSE vs original", &BenchRow::rmse);

  std::size_t lower = 0;
  std::size_t higher_psnr = 0;
  for (const auto& [key, methods] : table) {
    const auto get = [&](const char* m) { return methods.at(m); };
    if (get("proposed")->ssim_inputs < std::min(get("wavelet")->ssim_inputs, get("pca")->ssim_inputs)) ++lower;
    if (get("proposed")->psnr > std::max(get("wavelet")->psnr, get("pca")->psnr)) ++higher_psnr;
  }
  out << "Proposed SSIM-to-inputs below both wavelet and PCA: " << lower << " of " << table.size()
      << " rows.\n";
  out << "Proposed PSNR above both wavelet and PCA: " << higher_psnr << " of " << table.size()
      << " rows.\n";
  return out.str();
}

}  // namespace mff::cli
