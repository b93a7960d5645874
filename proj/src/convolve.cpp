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

#include "mildblur/convolve.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"

namespace mildblur {
namespace {

void require_fits(const Image& image, int side) {
  if (side > std::min(image.width(), image.height())) {
    throw std::invalid_argument("convolve: kernel larger than image");
  }
}

Image convolve_spatial(const Image& image, const Kernel& kernel) {
  const int w = image.width();
  const int h = image.height();
  const int r = kernel.radius();
  const int pw = w + 2 * r;
  const int ph = h + 2 * r;
  std::vector<float> padded(static_cast<std::size_t>(pw) * ph);
  std::vector<float> acc(static_cast<std::size_t>(w));
  std::vector<float> taps(kernel.taps.begin(), kernel.taps.end());
  Image out(w, h, image.channels());

  for (int c = 0; c < image.channels(); ++c) {
    for (int py = 0; py < ph; ++py) {
      const auto src = image.row(std::clamp(py - r, 0, h - 1), c);
      float* dst = padded.data() + static_cast<std::size_t>(py) * pw;
      for (int px = 0; px < r; ++px) dst[px] = src[0];
      std::copy(src.begin(), src.end(), dst + r);
      for (int px = r + w; px < pw; ++px) dst[px] = src[w - 1];
    }
    for (int y = 0; y < h; ++y) {
      std::ranges::fill(acc, 0.0f);
      for (int i = 0; i < kernel.side; ++i) {
        // out(y, x) = sum k(i, j) * in(y - (i - r), x - (j - r))
        const float* prow = padded.data() + static_cast<std::size_t>(y + 2 * r - i) * pw;
        for (int j = 0; j < kernel.side; ++j) {
          const float wgt = taps[static_cast<std::size_t>(i) * kernel.side + j];
          if (wgt == 0.0f) continue;
          const float* base = prow + 2 * r - j;
          for (int x = 0; x < w; ++x) acc[x] += wgt * base[x];
        }
      }
      std::ranges::copy(acc, out.row(y, c).begin());
    }
  }
  return out;
}

Image convolve_fourier(const Image& image, const Kernel& kernel) {
  const auto grid = detail::make_padded_grid(image.width(), image.height(), kernel.side);
  const auto transfer = detail::kernel_half_spectrum(kernel, grid.rows, grid.cols);
  return detail::apply_transfer(image, grid, transfer);
}

}  // namespace

Image convolve(const Image& image, const Kernel& kernel, ConvolutionEngine engine) {
  if (kernel.side < 1 || kernel.side % 2 == 0 ||
      kernel.taps.size() != static_cast<std::size_t>(kernel.side) * kernel.side) {
    throw std::invalid_argument("convolve: malformed kernel");
  }
  require_fits(image, kernel.side);
  return engine == ConvolutionEngine::spatial ? convolve_spatial(image, kernel) : convolve_fourier(image, kernel);
}

bool is_separable(const GaussianParams& params, double tolerance) {
  if (std::abs(params.rho - 1.0) <= tolerance) return true;
  const double t = wrap_angle_pi(params.theta);
  return t <= tolerance || (kPi - t) <= tolerance || std::abs(t - kPi / 2.0) <= tolerance;
}

Image separable_gaussian(const Image& image, const GaussianParams& params, double truncation) {
  params.validate();
  if (!is_separable(params)) {
    throw NotSeparableError("separable_gaussian: rotated anisotropic kernel");
  }
  const int radius = static_cast<int>(std::ceil(truncation * params.sigma0));
  double sx = params.sigma0;
  double sy = params.sigma1();
  if (std::abs(params.rho - 1.0) > 1e-6 && std::abs(params.theta - kPi / 2.0) <= 1e-6) std::swap(sx, sy);
  const auto hx = gaussian_taps_1d(sx, radius);
  const auto hy = gaussian_taps_1d(sy, radius);
  return convolve_cols(convolve_rows(image, hx), hy);
}

Image convolve_rows(const Image& image, std::span<const double> taps) {
  if (taps.size() % 2 == 0) throw std::invalid_argument("convolve_rows: even tap count");
  const int r = static_cast<int>(taps.size() / 2);
  const int w = image.width();
  std::vector<float> buf(static_cast<std::size_t>(w + 2 * r));
  std::vector<float> acc(static_cast<std::size_t>(w));
  std::vector<float> k(taps.begin(), taps.end());
  Image out(w, image.height(), image.channels());
  for (int c = 0; c < image.channels(); ++c) {
    for (int y = 0; y < image.height(); ++y) {
      const auto src = image.row(y, c);
      for (int i = 0; i < r; ++i) {
        buf[i] = src[0];
        buf[r + w + i] = src[w - 1];
      }
      std::ranges::copy(src, buf.begin() + r);
      std::ranges::fill(acc, 0.0f);
      for (int t = 0; t < static_cast<int>(k.size()); ++t) {
        const float wgt = k[t];
        const float* base = buf.data() + 2 * r - t;
        for (int x = 0; x < w; ++x) acc[x] += wgt * base[x];
      }
      std::ranges::copy(acc, out.row(y, c).begin());
    }
  }
  return out;
}

Image convolve_cols(const Image& image, std::span<const double> taps) {
  if (taps.size() % 2 == 0) throw std::invalid_argument("convolve_cols: even tap count");
  const int r = static_cast<int>(taps.size() / 2);
  const int w = image.width();
  const int h = image.height();
  std::vector<float> k(taps.begin(), taps.end());
  Image out(w, h, image.channels());
  for (int c = 0; c < image.channels(); ++c) {
    for (int y = 0; y < h; ++y) {
      auto dst = out.row(y, c);
      std::ranges::fill(dst, 0.0f);
      for (int t = 0; t < static_cast<int>(k.size()); ++t) {
        const auto src = image.row(std::clamp(y - t + r, 0, h - 1), c);
        const float wgt = k[t];
        for (int x = 0; x < w; ++x) dst[x] += wgt * src[x];
      }
    }
  }
  return out;
}

std::vector<std::complex<double>> kernel_spectrum(const Kernel& kernel, int rows, int cols) {
  const auto half = detail::kernel_half_spectrum(kernel, rows, cols);
  const int hc = cols / 2 + 1;
  std::vector<std::complex<double>> full(static_cast<std::size_t>(rows) * cols);
  for (int u = 0; u < rows; ++u) {
    for (int v = 0; v < cols; ++v) {
      std::complex<double> value;
      if (v < hc) {
        value = half[static_cast<std::size_t>(u) * hc + v];
      } else {
        value = std::conj(half[static_cast<std::size_t>((rows - u) % rows) * hc + (cols - v)]);
      }
      full[static_cast<std::size_t>(u) * cols + v] = value;
    }
  }
  return full;
}

}  // namespace mildblur
