// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

// mff: batch front end for multi-focus fusion.
//
//   mff fuse    --method proposed -k 2 a.pgm b.pgm -o fused.pgm [--map map.pgm]
//   mff synth   original.pgm --geometry vertical --sigma 2 -o prefix
//   mff metrics candidate.pgm reference.pgm
//   mff bench   originals... -o report.csv [--markdown report.md]

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bench.hpp"
#include "handles.hpp"
#include "mff/mff.h"

namespace {

using namespace mff::cli;

const std::map<std::string, mff_geometry> kGeometries = {
    {"vertical", MFF_SPLIT_VERTICAL},
    {"horizontal", MFF_SPLIT_HORIZONTAL},
    {"diag_main", MFF_SPLIT_DIAG_MAIN},
    {"diag_anti", MFF_SPLIT_DIAG_ANTI},
};

const std::map<std::string, mff_tie_break> kTieBreaks = {
    {"lowest", MFF_TIE_LOWEST_INDEX},
    {"highest", MFF_TIE_HIGHEST_INDEX},
};

std::size_t radius_for(double sigma, std::optional<std::size_t> radius) {
  if (radius) return *radius;
  if (!(sigma > 0.0)) return 1;  // the library rejects the sigma itself
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(3.0 * sigma)));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CliError("cannot create " + path);
  out << text;
  out.close();
  if (!out) throw CliError("write failed: " + path);
}

struct FuseArgs {
  std::vector<std::string> inputs;
  std::string method = "proposed";
  std::size_t k = 2;
  std::string tie_break = "lowest";
  std::size_t levels = 3;
  std::string out;
  std::string map;
  bool ascii = false;
};

void cmd_fuse(const FuseArgs& a) {
  if (a.inputs.size() < 2) throw CliError("fuse needs at least 2 input images");
  if (!is_method(a.method)) throw CliError("unknown method '" + a.method + "'");
  if (!a.map.empty() && a.method != "proposed") {
    throw CliError("--map is only available with --method proposed");
  }
  std::vector<Image> inputs;
  for (const auto& path : a.inputs) inputs.push_back(read_image(path));

  Selection sel;
  const Image fused = run_method(a.method, inputs, a.k, kTieBreaks.at(a.tie_break), a.levels,
                                 a.map.empty() ? nullptr : &sel);
  write_image(fused, a.out, a.ascii);
  if (!a.map.empty()) {
    mff_image* raw = nullptr;
    check(mff_selection_render(sel.get(), inputs.size(), &raw), "selection map");
    write_image(Image(raw), a.map, a.ascii);
  }
}

struct SynthArgs {
  std::string original;
  std::string geometry = "vertical";
  double sigma = 2.0;
  std::optional<std::size_t> radius;
  std::string prefix;
  bool ascii = false;
};

void cmd_synth(const SynthArgs& a) {
  const Image original = read_image(a.original);
  mff_image* ra = nullptr;
  mff_image* rb = nullptr;
  check(mff_make_pair(original.get(), kGeometries.at(a.geometry), a.sigma,
                      radius_for(a.sigma, a.radius), &ra, &rb),
        "synth");
  const Image ia(ra);
  const Image ib(rb);
  write_image(ia, a.prefix + "_a.pgm", a.ascii);
  write_image(ib, a.prefix + "_b.pgm", a.ascii);
}

struct MetricsArgs {
  std::string candidate;
  std::string reference;
  std::size_t uqi_window = 8;
};

std::string exact(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fixed(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void cmd_metrics(const MetricsArgs& a) {
  const Image cand = read_image(a.candidate);
  const Image ref = read_image(a.reference);
  double rmse = 0, psnr = 0, uqi = 0, ssim = 0;
  check(mff_rmse(cand.get(), ref.get(), &rmse), "rmse");
  check(mff_psnr(cand.get(), ref.get(), &psnr), "psnr");
  check(mff_uqi(cand.get(), ref.get(), a.uqi_window, &uqi), "uqi");
  check(mff_ssim(cand.get(), ref.get(), &ssim), "ssim");

  std::cout << "metric  value\n"
            << "rmse    " << fixed(rmse) << '\n'
            << "psnr    " << fixed(psnr) << (std::isinf(psnr) ? "" : " dB") << '\n'
            << "uqi     " << fixed(uqi) << "  (" << a.uqi_window << "x" << a.uqi_window
            << " sliding)\n"
            << "ssim    " << fixed(ssim) << "  (11x11 gaussian, sigma 1.5)\n\n"
            << "rmse=" << exact(rmse) << '\n'
            << "psnr=" << exact(psnr) << '\n'
            << "uqi=" << exact(uqi) << '\n'
            << "ssim=" << exact(ssim) << '\n'
            << "uqi_window=" << a.uqi_window << '\n'
            << "ssim_window=11\n"
            << "ssim_sigma=1.5\n";
}

struct BenchArgs {
  std::vector<std::string> originals;
  std::vector<std::string> geometries{"vertical", "diag_main"};
  double sigma = 2.0;
  std::optional<std::size_t> radius;
  std::size_t k = 2;
  std::size_t levels = 3;
  std::string csv;
  std::string markdown;
  bool identical = false;
  bool timing = false;
};

void cmd_bench(const BenchArgs& a) {
  BenchOptions opts;
  opts.originals = a.originals;
  for (const auto& g : a.geometries) opts.geometries.push_back(kGeometries.at(g));
  opts.sigma = a.sigma;
  opts.radius = radius_for(a.sigma, a.radius);
  opts.k = a.k;
  opts.levels = a.levels;
  opts.identical = a.identical;
  opts.timing = a.timing;
  const auto rows = run_bench(opts);
  write_text(a.csv, bench_csv(rows, a.timing));
  if (!a.markdown.empty()) write_text(a.markdown, bench_markdown(rows));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-focus image fusion by block-wise maximum standard deviation", "mff"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mff_version()));

  const auto method_check = CLI::IsMember({"proposed", "wavelet", "pca", "average"});
  const auto geometry_check = CLI::IsMember({"vertical", "horizontal", "diag_main", "diag_anti"});

  FuseArgs fuse;
  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse two or more co-registered PGM images");
  fuse_cmd->add_option("inputs", fuse.inputs, "Input PGM images (at least 2)")->required();
  fuse_cmd->add_option("--method", fuse.method, "proposed | wavelet | pca | average")
      ->check(method_check)
      ->capture_default_str();
  fuse_cmd->add_option("-k,--window", fuse.k, "Block side length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fuse_cmd->add_option("--tie-break", fuse.tie_break, "lowest | highest input index wins ties")
      ->check(CLI::IsMember({"lowest", "highest"}))
      ->capture_default_str();
  fuse_cmd->add_option("--levels", fuse.levels, "Wavelet decomposition depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fuse_cmd->add_option("-o,--output", fuse.out, "Fused PGM path")->required();
  fuse_cmd->add_option("--map", fuse.map, "Selection map PGM path (proposed only)");
  fuse_cmd->add_flag("--ascii", fuse.ascii, "Write P2 instead of P5");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Make a complementary half-blurred pair");
  synth_cmd->add_option("original", synth.original, "Sharp original PGM")->required();
  synth_cmd->add_option("--geometry", synth.geometry, "vertical | horizontal | diag_main | diag_anti")
      ->check(geometry_check)
      ->capture_default_str();
  synth_cmd->add_option("--sigma", synth.sigma, "Gaussian blur sigma (> 0)")->capture_default_str();
  synth_cmd->add_option("--radius", synth.radius, "Kernel half-width (default ceil(3 sigma))")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("-o,--output", synth.prefix, "Output prefix; writes <prefix>_a.pgm and <prefix>_b.pgm")
      ->required();
  synth_cmd->add_flag("--ascii", synth.ascii, "Write P2 instead of P5");

  MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Compare a candidate image against a reference");
  metrics_cmd->add_option("candidate", metrics.candidate, "Candidate PGM")->required();
  metrics_cmd->add_option("reference", metrics.reference, "Reference PGM")->required();
  metrics_cmd->add_option("--uqi-window", metrics.uqi_window, "UQI window side")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Synthesize pairs and compare all fusion methods");
  bench_cmd->add_option("originals", bench.originals, "Sharp original PGM images")->required();
  bench_cmd->add_option("--geometry", bench.geometries, "Split geometries")
      ->check(geometry_check)
      ->capture_default_str();
  bench_cmd->add_option("--sigma", bench.sigma, "Gaussian blur sigma (> 0)")->capture_default_str();
  bench_cmd->add_option("--radius", bench.radius, "Kernel half-width (default ceil(3 sigma))")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-k,--window", bench.k, "Block side length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--levels", bench.levels, "Wavelet decomposition depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("-o,--output", bench.csv, "CSV report path")->required();
  bench_cmd->add_option("--markdown", bench.markdown, "Also write a markdown report here");
  bench_cmd->add_flag("--identical", bench.identical,
                      "Degenerate run: both inputs equal the original (no blur)");
  bench_cmd->add_flag("--timing", bench.timing, "Record runtime_ms (makes the CSV non-reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mff: usage error: " << e.what() << " (see mff --help)\n";
    return 2;
  }

  try {
    if (fuse_cmd->parsed()) cmd_fuse(fuse);
    if (synth_cmd->parsed()) cmd_synth(synth);
    if (metrics_cmd->parsed()) cmd_metrics(metrics);
    if (bench_cmd->parsed()) cmd_bench(bench);
  } catch (const std::exception& e) {
    std::cerr << "mff: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
