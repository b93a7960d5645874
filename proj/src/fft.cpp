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

#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <mutex>
#include <stdexcept>

namespace mildblur::detail {
namespace {

// FFTW's planner is not reentrant; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <typename T>
struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : ptr(static_cast<T*>(fftw_malloc(sizeof(T) * n))), size(n) {
    if (ptr == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  T* ptr;
  std::size_t size;
};

class RealFft2d {
 public:
  RealFft2d(int rows, int cols)
      : rows_(rows), cols_(cols), real_(static_cast<std::size_t>(rows) * cols),
        half_(static_cast<std::size_t>(rows) * (cols / 2 + 1)) {
    std::lock_guard lock(planner_mutex());
    forward_ = fftw_plan_dft_r2c_2d(rows, cols, real_.ptr, half_.ptr, FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r_2d(rows, cols, half_.ptr, real_.ptr, FFTW_ESTIMATE);
    if (forward_ == nullptr || inverse_ == nullptr) throw std::runtime_error("FFTW planning failed");
  }
  ~RealFft2d() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
  }
  RealFft2d(const RealFft2d&) = delete;
  RealFft2d& operator=(const RealFft2d&) = delete;

  double* real() { return real_.ptr; }
  Complex* half() { return reinterpret_cast<Complex*>(half_.ptr); }
  void forward() { fftw_execute(forward_); }
  // Unnormalized: the caller divides by rows * cols.
  void inverse() { fftw_execute(inverse_); }

 private:
  int rows_;
  int cols_;
  FftwBuffer<double> real_;
  FftwBuffer<fftw_complex> half_;
  fftw_plan forward_ = nullptr;
  fftw_plan inverse_ = nullptr;
};

}  // namespace

int good_fft_size(int n) {
  for (int m = std::max(n, 1);; ++m) {
    int r = m;
    for (int p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

PaddedGrid make_padded_grid(int width, int height, int pad) {
  PaddedGrid g;
  g.width = width;
  g.height = height;
  g.pad_x = pad;
  g.pad_y = pad;
  g.cols = good_fft_size(width + 2 * pad);
  g.rows = good_fft_size(height + 2 * pad);
  return g;
}

std::vector<Complex> kernel_half_spectrum(const Kernel& kernel, int rows, int cols) {
  if (kernel.side > rows || kernel.side > cols) throw std::invalid_argument("kernel larger than FFT grid");
  RealFft2d fft(rows, cols);
  std::fill_n(fft.real(), static_cast<std::size_t>(rows) * cols, 0.0);
  const int r = kernel.radius();
  for (int i = 0; i < kernel.side; ++i) {
    const int yy = ((i - r) % rows + rows) % rows;
    for (int j = 0; j < kernel.side; ++j) {
      const int xx = ((j - r) % cols + cols) % cols;
      fft.real()[static_cast<std::size_t>(yy) * cols + xx] += kernel.at(i, j);
    }
  }
  fft.forward();
  const std::size_t n = static_cast<std::size_t>(rows) * (cols / 2 + 1);
  return std::vector<Complex>(fft.half(), fft.half() + n);
}

Image apply_transfer(const Image& image, const PaddedGrid& grid, std::span<const Complex> transfer) {
  if (transfer.size() != grid.half_size()) throw std::invalid_argument("transfer size mismatch");
  RealFft2d fft(grid.rows, grid.cols);
  Image out(image.width(), image.height(), image.channels());
  const double norm = 1.0 / (static_cast<double>(grid.rows) * grid.cols);
  const int w = image.width();
  const int h = image.height();

  for (int c = 0; c < image.channels(); ++c) {
    double* buf = fft.real();
    for (int gy = 0; gy < grid.rows; ++gy) {
      const int sy = std::clamp(gy - grid.pad_y, 0, h - 1);
      const auto src = image.row(sy, c);
      double* dst = buf + static_cast<std::size_t>(gy) * grid.cols;
      const int left = grid.pad_x;
      for (int gx = 0; gx < left; ++gx) dst[gx] = src[0];
      for (int x = 0; x < w; ++x) dst[left + x] = src[x];
      for (int gx = left + w; gx < grid.cols; ++gx) dst[gx] = src[w - 1];
    }
    fft.forward();
    Complex* spec = fft.half();
    for (std::size_t k = 0; k < transfer.size(); ++k) spec[k] *= transfer[k];
    fft.inverse();
    for (int y = 0; y < h; ++y) {
      const double* src = buf + static_cast<std::size_t>(y + grid.pad_y) * grid.cols + grid.pad_x;
      auto dst = out.row(y, c);
      for (int x = 0; x < w; ++x) dst[x] = static_cast<float>(src[x] * norm);
    }
  }
  return out;
}

}  // namespace mildblur::detail
