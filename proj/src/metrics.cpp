// Copyright 2026 The mildblur Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mildblur/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "mildblur/kernel.hpp"

namespace mildblur {

double psnr(const Image& a, const Image& b) {
  require_same_shape(a, b, "psnr");
  const auto sa = a.samples();
  const auto sb = b.samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    const double d = static_cast<double>(sa[i]) - sb[i];
    sum += d * d;
  }
  const double mse = sum / static_cast<double>(sa.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return -10.0 * std::log10(mse);
}

namespace {

// Weighted window means over the valid region: out is (w - 2r) x (h - 2r).
std::vector<double> window_mean(const std::vector<double>& src, int w, int h, const std::vector<double>& g) {
  const int r = static_cast<int>(g.size() / 2);
  const int ow = w - 2 * r;
  const int oh = h - 2 * r;
  std::vector<double> tmp(static_cast<std::size_t>(ow) * h, 0.0);
  for (int y = 0; y < h; ++y) {
    const double* s = src.data() + static_cast<std::size_t>(y) * w;
    double* t = tmp.data() + static_cast<std::size_t>(y) * ow;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      for (int x = 0; x < ow; ++x) t[x] += g[k] * s[x + k];
    }
  }
  std::vector<double> out(static_cast<std::size_t>(ow) * oh, 0.0);
  for (int y = 0; y < oh; ++y) {
    double* o = out.data() + static_cast<std::size_t>(y) * ow;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      const double* t = tmp.data() + static_cast<std::size_t>(y + k) * ow;
      for (int x = 0; x < ow; ++x) o[x] += g[k] * t[x];
    }
  }
  return out;
}

}  // namespace

double ssim(const Image& a, const Image& b) {
  require_same_shape(a, b, "ssim");
  const int w = a.width();
  const int h = a.height();
  if (w < 2 * kSsimRadius + 1 || h < 2 * kSsimRadius + 1) {
    throw std::invalid_argument("ssim: image smaller than the 11x11 window");
  }
  const auto g = gaussian_taps_1d(kSsimSigma, kSsimRadius);
  const double c1 = kSsimK1 * kSsimK1;
  const double c2 = kSsimK2 * kSsimK2;
  const std::size_t n = a.pixel_count();

  double total = 0.0;
  std::vector<double> x(n), y(n), xx(n), yy(n), xy(n);
  for (int c = 0; c < a.channels(); ++c) {
    const auto pa = a.plane(c);
    const auto pb = b.plane(c);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = pa[i];
      y[i] = pb[i];
      xx[i] = x[i] * x[i];
      yy[i] = y[i] * y[i];
      xy[i] = x[i] * y[i];
    }
    const auto mx = window_mean(x, w, h, g);
    const auto my = window_mean(y, w, h, g);
    const auto mxx = window_mean(xx, w, h, g);
    const auto myy = window_mean(yy, w, h, g);
    const auto mxy = window_mean(xy, w, h, g);
    double sum = 0.0;
    for (std::size_t i = 0; i < mx.size(); ++i) {
      const double vx = mxx[i] - mx[i] * mx[i];
      const double vy = myy[i] - my[i] * my[i];
      const double cxy = mxy[i] - mx[i] * my[i];
      const double num = (2.0 * mx[i] * my[i] + c1) * (2.0 * cxy + c2);
      const double den = (mx[i] * mx[i] + my[i] * my[i] + c1) * (vx + vy + c2);
      sum += num / den;
    }
    total += sum / static_cast<double>(mx.size());
  }
  return total / a.channels();
}

}  // namespace mildblur
