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

// Internal FFTW wrapper shared by the Fourier convolution engine and the
// Fourier polynomial path.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mildblur/image.hpp"
#include "mildblur/kernel.hpp"

namespace mildblur::detail {

using Complex = std::complex<double>;

/// Smallest n' >= n whose only prime factors are 2, 3, 5 and 7.
int good_fft_size(int n);

/// Image placed at (pad_x, pad_y) inside a rows x cols periodic grid; the
/// rest of the grid is filled by edge replication.
struct PaddedGrid {
  int width = 0;
  int height = 0;
  int pad_x = 0;
  int pad_y = 0;
  int rows = 0;
  int cols = 0;

  int half_cols() const { return cols / 2 + 1; }
  std::size_t half_size() const { return static_cast<std::size_t>(rows) * half_cols(); }
};

/// Grid with at least `pad` replicated samples on every side.
PaddedGrid make_padded_grid(int width, int height, int pad);

/// Hermitian half of the DFT (rows x (cols/2+1)) of a kernel whose center is
/// wrapped to the grid origin, so multiplying by it is a true convolution.
std::vector<Complex> kernel_half_spectrum(const Kernel& kernel, int rows, int cols);

/// Multiply every channel's spectrum by `transfer` (half layout) and return
/// the cropped result.
Image apply_transfer(const Image& image, const PaddedGrid& grid, std::span<const Complex> transfer);

}  // namespace mildblur::detail
