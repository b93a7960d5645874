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

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mildblur {

/// Input that carries no usable signal (constant image, all-zero features).
class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read, written or decoded.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Planar floating-point raster with 1 or 3 channels.
///
/// Samples are stored channel after channel, each channel row-major.
/// Values are nominally in [0, 1] but intermediate results are not clamped.
class Image {
 public:
  Image() = default;
  Image(int width, int height, int channels = 1, float fill = 0.0f);

  int width() const { return width_; }
  int height() const { return height_; }
  int channels() const { return channels_; }
  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  float& at(int x, int y, int c = 0) { return data_[index(x, y, c)]; }
  float at(int x, int y, int c = 0) const { return data_[index(x, y, c)]; }

  std::span<float> plane(int c);
  std::span<const float> plane(int c) const;
  std::span<float> row(int y, int c = 0) { return plane(c).subspan(static_cast<std::size_t>(y) * width_, width_); }
  std::span<const float> row(int y, int c = 0) const {
    return plane(c).subspan(static_cast<std::size_t>(y) * width_, width_);
  }

  std::span<float> samples() { return data_; }
  std::span<const float> samples() const { return data_; }

  /// A 1-channel copy of channel `c`.
  Image channel(int c) const;
  void set_channel(int c, const Image& src);

  bool same_shape(const Image& other) const {
    return width_ == other.width_ && height_ == other.height_ && channels_ == other.channels_;
  }
  bool same_size(const Image& other) const { return width_ == other.width_ && height_ == other.height_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t index(int x, int y, int c) const {
    return (static_cast<std::size_t>(c) * height_ + y) * width_ + x;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 0;
  std::vector<float> data_;
};

/// Rec. 709 luminance of an RGB image; 1-channel images are returned as is.
Image luminance(const Image& image);

/// Clamp every sample into [lo, hi].
Image clamp(const Image& image, float lo = 0.0f, float hi = 1.0f);

double mean(const Image& image);

/// Throws std::invalid_argument unless the shapes match.
void require_same_shape(const Image& a, const Image& b, const char* what);

/// True when no sample is NaN or infinite.
bool all_finite(const Image& image);

/// Pixel-wise a - b, a + b and s * a.
Image subtract(const Image& a, const Image& b);
Image add(const Image& a, const Image& b);
Image scale(const Image& a, float s);

/// Rotate by 90 degrees counter-clockwise as seen on screen.
Image rotate90(const Image& image);

}  // namespace mildblur
