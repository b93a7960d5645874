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

#include "mildblur/smoother.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mildblur {
namespace {

// Filter one line (stride-separated samples of every channel) in place.
void smooth_line(Image& img, int count, std::size_t start, std::size_t stride, double base, double inv_range,
                 std::vector<float>& weights) {
  const int channels = img.channels();
  weights.resize(static_cast<std::size_t>(count));
  weights[0] = 0.0f;
  for (int i = 1; i < count; ++i) {
    double diff = 0.0;
    for (int c = 0; c < channels; ++c) {
      const auto p = img.plane(c);
      diff += std::abs(p[start + i * stride] - p[start + (i - 1) * stride]);
    }
    weights[i] = static_cast<float>(base * std::exp(-diff * inv_range));
  }
  for (int c = 0; c < channels; ++c) {
    auto p = img.plane(c);
    for (int i = 1; i < count; ++i) {
      const float a = weights[i];
      float& cur = p[start + i * stride];
      cur = (1.0f - a) * cur + a * p[start + (i - 1) * stride];
    }
    for (int i = count - 2; i >= 0; --i) {
      const float a = weights[i + 1];
      float& cur = p[start + i * stride];
      cur = (1.0f - a) * cur + a * p[start + (i + 1) * stride];
    }
  }
}

}  // namespace

Image edge_stopping_smooth(const Image& image, const EdgeSmootherParams& params) {
  if (!(params.spatial_sigma > 0.0) || !(params.range_sigma > 0.0)) {
    throw std::invalid_argument("edge smoother: sigmas must be positive");
  }
  Image out = image;
  const double base = std::exp(-1.0 / params.spatial_sigma);
  const double inv_range = 1.0 / params.range_sigma;
  std::vector<float> weights;
  const int w = image.width();
  const int h = image.height();
  for (int y = 0; y < h; ++y) smooth_line(out, w, static_cast<std::size_t>(y) * w, 1, base, inv_range, weights);
  for (int x = 0; x < w; ++x) smooth_line(out, h, static_cast<std::size_t>(x), w, base, inv_range, weights);
  return out;
}

Smoother make_edge_smoother(const EdgeSmootherParams& params) {
  return [params](const Image& v) { return edge_stopping_smooth(v, params); };
}

}  // namespace mildblur
