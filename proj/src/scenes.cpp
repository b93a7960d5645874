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

#include "mildblur/scenes.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mildblur {
namespace {

constexpr int kSuper = 3;

struct Leaf {
  double cx, cy, r;
  float color[3];
  float gx, gy;  // shading slope per pixel, relative to the center
};

}  // namespace

Image dead_leaves(const DeadLeavesOptions& o, std::uint64_t seed) {
  if (o.width < 1 || o.height < 1) throw std::invalid_argument("dead_leaves: empty size");
  if (o.channels != 1 && o.channels != 3) throw std::invalid_argument("dead_leaves: channels must be 1 or 3");
  const double rmax = o.max_radius > 0.0 ? o.max_radius : std::min(o.width, o.height) / 3.0;
  if (!(o.min_radius > 0.0) || rmax < o.min_radius) throw std::invalid_argument("dead_leaves: bad radius range");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int count = std::max(1, static_cast<int>(o.density * o.width * o.height / 1000.0));

  // Radii follow p(r) ~ r^-3, sampled by inverting the CDF.
  const double a = 1.0 / (o.min_radius * o.min_radius);
  const double bnd = 1.0 / (rmax * rmax);
  std::vector<Leaf> leaves(static_cast<std::size_t>(count) + 1);
  auto random_leaf = [&](Leaf& leaf) {
    leaf.cx = u01(rng) * o.width;
    leaf.cy = u01(rng) * o.height;
    leaf.r = 1.0 / std::sqrt(a - u01(rng) * (a - bnd));
    // Strongly correlated channels: a gray level plus a small tint.
    const double gray = u01(rng);
    for (float& c : leaf.color) c = static_cast<float>(std::clamp(gray + 0.2 * (u01(rng) - 0.5), 0.0, 1.0));
    leaf.gx = static_cast<float>((u01(rng) - 0.5) * 0.2 / leaf.r);
    leaf.gy = static_cast<float>((u01(rng) - 0.5) * 0.2 / leaf.r);
  };
  for (auto& leaf : leaves) random_leaf(leaf);
  // Index 0 is the background.
  leaves[0].cx = o.width / 2.0;
  leaves[0].cy = o.height / 2.0;
  leaves[0].r = 1e9;
  leaves[0].gx = leaves[0].gy = 0.0f;

  const int sw = o.width * kSuper;
  const int sh = o.height * kSuper;
  std::vector<int> label(static_cast<std::size_t>(sw) * sh, 0);
  for (int i = 1; i <= count; ++i) {
    const Leaf& leaf = leaves[i];
    const double scx = leaf.cx * kSuper;
    const double scy = leaf.cy * kSuper;
    const double sr = leaf.r * kSuper;
    const int y0 = std::max(0, static_cast<int>(std::floor(scy - sr)));
    const int y1 = std::min(sh - 1, static_cast<int>(std::ceil(scy + sr)));
    for (int y = y0; y <= y1; ++y) {
      const double dy = y + 0.5 - scy;
      const double half = sr * sr - dy * dy;
      if (half < 0.0) continue;
      const double span = std::sqrt(half);
      const int x0 = std::max(0, static_cast<int>(std::ceil(scx - span - 0.5)));
      const int x1 = std::min(sw - 1, static_cast<int>(std::floor(scx + span - 0.5)));
      int* row = label.data() + static_cast<std::size_t>(y) * sw;
      for (int x = x0; x <= x1; ++x) row[x] = i;
    }
  }

  Image out(o.width, o.height, o.channels);
  const float norm = 1.0f / (kSuper * kSuper);
  for (int y = 0; y < o.height; ++y) {
    for (int x = 0; x < o.width; ++x) {
      float acc[3] = {0.0f, 0.0f, 0.0f};
      for (int sy = 0; sy < kSuper; ++sy) {
        for (int sx = 0; sx < kSuper; ++sx) {
          const int id = label[static_cast<std::size_t>(y * kSuper + sy) * sw + x * kSuper + sx];
          const Leaf& leaf = leaves[id];
          const float px = static_cast<float>(x + (sx + 0.5) / kSuper - leaf.cx);
          const float py = static_cast<float>(y + (sy + 0.5) / kSuper - leaf.cy);
          const float shade = leaf.gx * px + leaf.gy * py;
          for (int c = 0; c < o.channels; ++c) acc[c] += leaf.color[c] + shade;
        }
      }
      for (int c = 0; c < o.channels; ++c) out.at(x, y, c) = std::clamp(acc[c] * norm, 0.0f, 1.0f);
    }
  }
  return out;
}

std::vector<Image> procedural_corpus(int count, int size, std::uint64_t first_seed, int channels) {
  if (count < 0) throw std::invalid_argument("procedural_corpus: negative count");
  DeadLeavesOptions o;
  o.width = o.height = size;
  o.channels = channels;
  std::vector<Image> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(dead_leaves(o, first_seed + static_cast<std::uint64_t>(i)));
  return out;
}

Image step_edge(int width, int height, int x0, float lo, float hi) {
  Image out(width, height, 1, lo);
  for (int y = 0; y < height; ++y) {
    for (int x = std::max(0, x0); x < width; ++x) out.at(x, y) = hi;
  }
  return out;
}

Image checkerboard(int width, int height, int cell, float lo, float hi) {
  if (cell < 1) throw std::invalid_argument("checkerboard: cell must be positive");
  Image out(width, height, 1);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) out.at(x, y) = ((x / cell + y / cell) % 2 == 0) ? lo : hi;
  }
  return out;
}

}  // namespace mildblur
