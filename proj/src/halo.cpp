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

#include "mildblur/halo.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mildblur/convolve.hpp"
#include "mildblur/gradient.hpp"

namespace mildblur {
namespace {

struct ReversalTerms {
  Image m;          // -grad v . grad vbar
  Image grad_norm;  // |grad v|^2
};

ReversalTerms reversal_terms(const Image& v, const Image& vbar) {
  require_same_shape(v, vbar, "halo");
  ReversalTerms t{Image(v.width(), v.height(), 1), Image(v.width(), v.height(), 1)};
  auto m = t.m.samples();
  auto n = t.grad_norm.samples();
  for (int c = 0; c < v.channels(); ++c) {
    const GradientField gv = gradient(v.channel(c));
    const GradientField gb = gradient(vbar.channel(c));
    const auto vx = gv.gx.samples();
    const auto vy = gv.gy.samples();
    const auto bx = gb.gx.samples();
    const auto by = gb.gy.samples();
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] -= vx[i] * bx[i] + vy[i] * by[i];
      n[i] += vx[i] * vx[i] + vy[i] * vy[i];
    }
  }
  return t;
}

// One-pixel version of the channel-summed reversal map, using the same
// differences as gradient().
double reversal_at(const Image& v, const Image& u, int x, int y) {
  const int w = v.width();
  const int h = v.height();
  const auto diff = [](const Image& img, int c, int x0, int y0, int x1, int y1, float wgt) {
    return wgt * (img.at(x1, y1, c) - img.at(x0, y0, c));
  };
  double m = 0.0;
  for (int c = 0; c < v.channels(); ++c) {
    float vx = 0.0f, ux = 0.0f, vy = 0.0f, uy = 0.0f;
    if (w > 1) {
      const int x0 = std::max(x - 1, 0), x1 = std::min(x + 1, w - 1);
      const float wgt = (x == 0 || x == w - 1) ? 1.0f : 0.5f;
      vx = diff(v, c, x0, y, x1, y, wgt);
      ux = diff(u, c, x0, y, x1, y, wgt);
    }
    if (h > 1) {
      const int y0 = std::min(y + 1, h - 1), y1 = std::max(y - 1, 0);
      const float wgt = (y == 0 || y == h - 1) ? 1.0f : 0.5f;
      vy = diff(v, c, x, y0, x, y1, wgt);
      uy = diff(u, c, x, y0, x, y1, wgt);
    }
    m -= vx * ux + vy * uy;
  }
  return m;
}

}  // namespace

Image reversal_map(const Image& v, const Image& vbar) { return reversal_terms(v, vbar).m; }

std::pair<Image, BlendMask> blend(const Image& v, const Image& vbar, const BlendOptions& options) {
  const ReversalTerms t = reversal_terms(v, vbar);
  BlendMask mask{Image(v.width(), v.height(), 1)};
  auto z = mask.z.samples();
  const auto m = t.m.samples();
  const auto n = t.grad_norm.samples();
  for (std::size_t i = 0; i < z.size(); ++i) {
    // The bound only exists where the gradient is reversed; elsewhere the
    // ratio is meaningless (it exceeds 1 once |grad vbar| > |grad v|).
    if (m[i] > 0.0f) {
      const double denom = std::max(static_cast<double>(n[i]) + m[i], kHaloEpsilon);
      z[i] = static_cast<float>(std::clamp(m[i] / denom, 0.0, 1.0));
    }
  }
  if (options.smooth_mask && std::min(v.width(), v.height()) >= 9) {
    mask.z = clamp(separable_gaussian(mask.z, GaussianParams{1.0, 1.0, 0.0}), 0.0f, 1.0f);
    z = mask.z.samples();
  }

  Image out = vbar;
  for (int c = 0; c < v.channels(); ++c) {
    auto dst = out.plane(c);
    const auto src = v.plane(c);
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (z[i] != 0.0f) dst[i] = z[i] * src[i] + (1.0f - z[i]) * dst[i];
    }
  }
  if (options.repair) mask.repaired = repair_reversals(v, out, mask.z, options.repair_tolerance);
  return {std::move(out), std::move(mask)};
}

int repair_reversals(const Image& v, Image& out, Image& z, double tolerance) {
  require_same_shape(v, out, "halo");
  const int w = v.width();
  const int h = v.height();
  const auto idx = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };
  auto zs = z.samples();

  // Pixels to test this round; the first round tests all of them.
  std::vector<std::pair<int, int>> pending;
  const Image m = reversal_map(v, out);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (m.at(x, y) > tolerance) pending.emplace_back(x, y);
    }
  }

  std::vector<char> queued(static_cast<std::size_t>(w) * h);
  std::vector<std::pair<int, int>> reset;
  int restored = 0;
  while (!pending.empty()) {
    reset.clear();
    for (const auto& [x, y] : pending) {
      // Central differences at (x, y) read exactly these samples.
      const std::pair<int, int> stencil[] = {{x, y}, {x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
      for (const auto& [sx, sy] : stencil) {
        if (sx < 0 || sy < 0 || sx >= w || sy >= h) continue;
        const std::size_t i = idx(sx, sy);
        if (zs[i] == 1.0f) continue;
        zs[i] = 1.0f;
        for (int c = 0; c < v.channels(); ++c) out.plane(c)[i] = v.plane(c)[i];
        reset.emplace_back(sx, sy);
        ++restored;
      }
    }
    // Only gradients that read a reset sample can have changed.
    pending.clear();
    for (const auto& [x, y] : reset) {
      const std::pair<int, int> readers[] = {{x, y}, {x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
      for (const auto& [rx, ry] : readers) {
        if (rx < 0 || ry < 0 || rx >= w || ry >= h || queued[idx(rx, ry)]) continue;
        queued[idx(rx, ry)] = 1;
        if (reversal_at(v, out, rx, ry) > tolerance) pending.emplace_back(rx, ry);
      }
    }
    for (const auto& [x, y] : reset) {
      const std::pair<int, int> readers[] = {{x, y}, {x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
      for (const auto& [rx, ry] : readers) {
        if (rx >= 0 && ry >= 0 && rx < w && ry < h) queued[idx(rx, ry)] = 0;
      }
    }
  }
  return restored;
}

}  // namespace mildblur
