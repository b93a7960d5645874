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

#include "mildblur/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mildblur {

Image::Image(int width, int height, int channels, float fill)
    : width_(width), height_(height), channels_(channels) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  if (channels != 1 && channels != 3) {
    throw std::invalid_argument("image must have 1 or 3 channels");
  }
  data_.assign(static_cast<std::size_t>(width) * height * channels, fill);
}

std::span<float> Image::plane(int c) {
  return std::span<float>(data_).subspan(static_cast<std::size_t>(c) * pixel_count(), pixel_count());
}

std::span<const float> Image::plane(int c) const {
  return std::span<const float>(data_).subspan(static_cast<std::size_t>(c) * pixel_count(), pixel_count());
}

Image Image::channel(int c) const {
  Image out(width_, height_, 1);
  std::ranges::copy(plane(c), out.plane(0).begin());
  return out;
}

void Image::set_channel(int c, const Image& src) {
  if (!same_size(src) || src.channels() != 1) {
    throw std::invalid_argument("set_channel: shape mismatch");
  }
  std::ranges::copy(src.plane(0), plane(c).begin());
}

Image luminance(const Image& image) {
  if (image.channels() == 1) return image;
  Image out(image.width(), image.height(), 1);
  const auto r = image.plane(0);
  const auto g = image.plane(1);
  const auto b = image.plane(2);
  auto dst = out.plane(0);
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = 0.2126f * r[i] + 0.7152f * g[i] + 0.0722f * b[i];
  }
  return out;
}

Image clamp(const Image& image, float lo, float hi) {
  Image out = image;
  for (float& v : out.samples()) v = std::clamp(v, lo, hi);
  return out;
}

double mean(const Image& image) {
  const auto s = image.samples();
  if (s.empty()) return 0.0;
  return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size());
}

void require_same_shape(const Image& a, const Image& b, const char* what) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(what) + ": image dimensions differ");
  }
}

bool all_finite(const Image& image) {
  return std::ranges::all_of(image.samples(), [](float v) { return std::isfinite(v); });
}

Image subtract(const Image& a, const Image& b) {
  require_same_shape(a, b, "subtract");
  Image out = a;
  auto d = out.samples();
  auto s = b.samples();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= s[i];
  return out;
}

Image add(const Image& a, const Image& b) {
  require_same_shape(a, b, "add");
  Image out = a;
  auto d = out.samples();
  auto s = b.samples();
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += s[i];
  return out;
}

Image scale(const Image& a, float s) {
  Image out = a;
  for (float& v : out.samples()) v *= s;
  return out;
}

Image rotate90(const Image& image) {
  const int w = image.width();
  const int h = image.height();
  Image out(h, w, image.channels());
  // Screen-space CCW: source column x becomes destination row (w - 1 - x).
  for (int c = 0; c < image.channels(); ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        out.at(y, w - 1 - x, c) = image.at(x, y, c);
      }
    }
  }
  return out;
}

}  // namespace mildblur
