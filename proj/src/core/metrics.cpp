// Copyright 2026 The mff Authors
// SPDX-License-Identifier: Apache-2.0

#include "mff/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "mff/error.hpp"

namespace mff {

namespace {

void require_pair(const GrayImage& a, const GrayImage& b) {
  if (!a.same_shape(b)) {
    throw Error(ErrorCode::dimension_mismatch,
                "image dimensions differ: " + std::to_string(a.width()) + "x" +
                    std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                    std::to_string(b.height()));
  }
}

void require_window(const GrayImage& a, std::size_t window) {
  if (window == 0) throw Error(ErrorCode::invalid_argument, "window size must be at least 1");
  if (a.width() < window || a.height() < window) {
    throw Error(ErrorCode::invalid_argument,
                "image " + std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                    " is smaller than the " + std::to_string(window) + "x" +
                    std::to_string(window) + " window");
  }
}

double mse(const GrayImage& a, const GrayImage& b) {
  require_pair(a, b);
  double acc = 0.0;
  const auto sa = a.samples();
  const auto sb = b.samples();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double d = sa[i] - sb[i];
    acc += d * d;
  }
  return acc / static_cast<double>(sa.size());
}

std::array<double, kSsimWindow> ssim_weights() {
  std::array<double, kSsimWindow> w{};
  constexpr int r = static_cast<int>(kSsimWindow / 2);
  double sum = 0.0;
  for (int i = -r; i <= r; ++i) {
    w[static_cast<std::size_t>(i + r)] = std::exp(-(i * i) / (2.0 * kSsimSigma * kSsimSigma));
    sum += w[static_cast<std::size_t>(i + r)];
  }
  for (double& v : w) v /= sum;
  return w;
}

// Valid-region separable filtering: output is (w - 10) x (h - 10).
std::vector<double> filter_valid(std::span<const double> src, std::size_t w, std::size_t h,
                                 const std::array<double, kSsimWindow>& k) {
  const std::size_t ow = w - kSsimWindow + 1;
  const std::size_t oh = h - kSsimWindow + 1;
  std::vector<double> rows(ow * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t i = 0; i < kSsimWindow; ++i) acc += k[i] * src[y * w + x + i];
      rows[y * ow + x] = acc;
    }
  }
  std::vector<double> out(ow * oh);
  for (std::size_t y = 0; y < oh; ++y) {
    for (std::size_t x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (std::size_t i = 0; i < kSsimWindow; ++i) acc += k[i] * rows[(y + i) * ow + x];
      out[y * ow + x] = acc;
    }
  }
  return out;
}

}  // namespace

double rmse(const GrayImage& a, const GrayImage& b) { return std::sqrt(mse(a, b)); }

double psnr(const GrayImage& a, const GrayImage& b) {
  const double m = mse(a, b);
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(kPeak * kPeak / m);
}

double uqi(const GrayImage& a, const GrayImage& b, std::size_t window) {
  require_pair(a, b);
  require_window(a, window);
  const std::size_t n = window * window;
  double total = 0.0;
  std::size_t counted = 0;
  for (std::size_t y0 = 0; y0 + window <= a.height(); ++y0) {
    for (std::size_t x0 = 0; x0 + window <= a.width(); ++x0) {
      double sx = 0.0;
      double sy = 0.0;
      for (std::size_t y = y0; y < y0 + window; ++y) {
        for (std::size_t x = x0; x < x0 + window; ++x) {
          sx += a.at(x, y);
          sy += b.at(x, y);
        }
      }
      const double mx = sx / static_cast<double>(n);
      const double my = sy / static_cast<double>(n);
      double vx = 0.0;
      double vy = 0.0;
      double cxy = 0.0;
      for (std::size_t y = y0; y < y0 + window; ++y) {
        for (std::size_t x = x0; x < x0 + window; ++x) {
          const double dx = a.at(x, y) - mx;
          const double dy = b.at(x, y) - my;
          vx += dx * dx;
          vy += dy * dy;
          cxy += dx * dy;
        }
      }
      // The common 1/(n-1) factor of the moments cancels in Q.
      const double den = (vx + vy) * (mx * mx + my * my);
      if (den == 0.0) continue;
      total += 4.0 * cxy * mx * my / den;
      ++counted;
    }
  }
  if (counted == 0) throw Error(ErrorCode::degenerate, "every UQI window is degenerate");
  return total / static_cast<double>(counted);
}

double ssim(const GrayImage& a, const GrayImage& b) {
  require_pair(a, b);
  require_window(a, kSsimWindow);
  static const auto k = ssim_weights();
  const std::size_t w = a.width();
  const std::size_t h = a.height();
  const auto sa = a.samples();
  const auto sb = b.samples();
  std::vector<double> aa(sa.size()), bb(sa.size()), ab(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    aa[i] = sa[i] * sa[i];
    bb[i] = sb[i] * sb[i];
    ab[i] = sa[i] * sb[i];
  }
  const auto mu_a = filter_valid(sa, w, h, k);
  const auto mu_b = filter_valid(sb, w, h, k);
  const auto e_aa = filter_valid(aa, w, h, k);
  const auto e_bb = filter_valid(bb, w, h, k);
  const auto e_ab = filter_valid(ab, w, h, k);

  constexpr double c1 = (kSsimK1 * kPeak) * (kSsimK1 * kPeak);
  constexpr double c2 = (kSsimK2 * kPeak) * (kSsimK2 * kPeak);
  double total = 0.0;
  for (std::size_t i = 0; i < mu_a.size(); ++i) {
    const double ma = mu_a[i];
    const double mb = mu_b[i];
    const double va = e_aa[i] - ma * ma;
    const double vb = e_bb[i] - mb * mb;
    const double cov = e_ab[i] - ma * mb;
    total += ((2.0 * ma * mb + c1) * (2.0 * cov + c2)) /
             ((ma * ma + mb * mb + c1) * (va + vb + c2));
  }
  return total / static_cast<double>(mu_a.size());
}

SsimToInputs ssim_to_inputs(const GrayImage& fused, std::span<const GrayImage> inputs) {
  if (inputs.empty()) throw Error(ErrorCode::invalid_argument, "no input images given");
  SsimToInputs out;
  out.per_input.reserve(inputs.size());
  for (const auto& in : inputs) out.per_input.push_back(ssim(fused, in));
  double sum = 0.0;
  for (double v : out.per_input) sum += v;
  out.mean = sum / static_cast<double>(inputs.size());
  return out;
}

MetricReport compare(const GrayImage& candidate, const GrayImage& reference,
                     std::size_t uqi_window) {
  MetricReport r;
  r.rmse = rmse(candidate, reference);
  r.psnr = psnr(candidate, reference);
  r.uqi = uqi(candidate, reference, uqi_window);
  r.ssim = ssim(candidate, reference);
  r.uqi_window = uqi_window;
  return r;
}

}  // namespace mff
