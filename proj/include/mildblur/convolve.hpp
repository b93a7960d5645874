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

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "mildblur/image.hpp"
#include "mildblur/kernel.hpp"

namespace mildblur {

enum class ConvolutionEngine { spatial, fourier };

/// Raised by separable_gaussian for rotated anisotropic kernels; callers fall
/// back to convolve().
class NotSeparableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Same-size true convolution (out(p) = sum_q k(q) in(p - q)) of every channel.
///
/// The spatial engine reads outside the image by edge replication. The
/// Fourier engine replicates the edges into a periodic grid padded by the
/// kernel side, which makes it agree with the spatial engine up to rounding.
/// Throws std::invalid_argument if the kernel is larger than the image.
Image convolve(const Image& image, const Kernel& kernel, ConvolutionEngine engine = ConvolutionEngine::spatial);

/// Axis-aligned (theta in {0, pi/2} within `tolerance`) or isotropic kernels.
bool is_separable(const GaussianParams& params, double tolerance = 1e-6);

/// Two 1-D passes with the per-axis Gaussians on the same square support as
/// make_gaussian_kernel. Throws NotSeparableError otherwise.
Image separable_gaussian(const Image& image, const GaussianParams& params, double truncation = kDefaultTruncation);

/// 1-D convolution along rows (horizontal) or columns (vertical) with
/// replicated edges. taps.size() must be odd.
Image convolve_rows(const Image& image, std::span<const double> taps);
Image convolve_cols(const Image& image, std::span<const double> taps);

/// Full rows x cols DFT of the kernel with its center at the origin,
/// row-major. Used to inspect kernel spectra.
std::vector<std::complex<double>> kernel_spectrum(const Kernel& kernel, int rows, int cols);

}  // namespace mildblur
