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

#include "mildblur/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace mildblur {

GradientField gradient(const Image& image) {
  if (image.channels() != 1) throw std::invalid_argument("gradient: expected a 1-channel image");
  const int w = image.width();
  const int h = image.height();
  GradientField g{Image(w, h, 1), Image(w, h, 1)};

  for (int y = 0; y < h; ++y) {
    const auto src = image.row(y);
    auto gx = g.gx.row(y);
    if (w == 1) {
      gx[0] = 0.0f;
      continue;
    }
    gx[0] = src[1] - src[0];
    for (int x = 1; x < w - 1; ++x) gx[x] = 0.5f * (src[x + 1] - src[x - 1]);
    gx[w - 1] = src[w - 1] - src[w - 2];
  }

  // y points up, so the derivative is taken against the row index.
  for (int y = 0; y < h; ++y) {
    auto gy = g.gy.row(y);
    if (h == 1) {
      std::ranges::fill(gy, 0.0f);
      continue;
    }
    const int above = std::max(y - 1, 0);
    const int below = std::min(y + 1, h - 1);
    const float weight = (y == 0 || y == h - 1) ? 1.0f : 0.5f;
    const auto up = image.row(above);
    const auto down = image.row(below);
    for (int x = 0; x < w; ++x) gy[x] = weight * (up[x] - down[x]);
  }
  return g;
}

double directional_derivative_max(const GradientField& grad, double psi, int border) {
  const int w = grad.gx.width();
  const int h = grad.gx.height();
  const int bx = std::min(border, (w - 1) / 2);
  const int by = std::min(border, (h - 1) / 2);
  const float cs = static_cast<float>(std::cos(psi));
  const float sn = static_cast<float>(std::sin(psi));
  float best = 0.0f;
  for (int y = by; y < h - by; ++y) {
    const auto gx = grad.gx.row(y);
    const auto gy = grad.gy.row(y);
    for (int x = bx; x < w - bx; ++x) {
      best = std::max(best, std::abs(gx[x] * cs + gy[x] * sn));
    }
  }
  return best;
}

namespace {

// Sample quantile with linear interpolation between the two bracketing order
// statistics (the "type 7" definition).
double quantile_of(std::vector<float>& values, double q) {
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto k = static_cast<std::size_t>(std::floor(pos));
  const double frac = pos - static_cast<double>(k);
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), values.end());
  const double a = values[k];
  if (frac == 0.0 || k + 1 >= values.size()) return a;
  const double b = *std::min_element(values.begin() + static_cast<std::ptrdiff_t>(k) + 1, values.end());
  return a + frac * (b - a);
}

}  // namespace

QuantileNormalized quantile_normalize(const Image& image, double q) {
  if (!(q >= 0.0 && q < 0.5)) throw std::invalid_argument("quantile_normalize: q must lie in [0, 0.5)");
  std::vector<float> values(image.samples().begin(), image.samples().end());
  const double lo = quantile_of(values, q);
  const double hi = quantile_of(values, 1.0 - q);
  if (!(hi > lo)) throw DegenerateInputError("quantile_normalize: image has no dynamic range");

  QuantileNormalized out{image, lo, hi};
  const double inv = 1.0 / (hi - lo);
  for (float& v : out.image.samples()) {
    v = static_cast<float>(std::clamp((v - lo) * inv, 0.0, 1.0));
  }
  return out;
}

}  // namespace mildblur
