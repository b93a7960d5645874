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

#include <cstdint>

#include "mildblur/image.hpp"
#include "mildblur/kernel.hpp"

namespace mildblur {

inline constexpr double kDefaultNoiseSigma = 0.01;

struct BlurSample {
  GaussianParams params;
  /// Standard deviation of the additive noise, in units of full scale.
  double noise_sigma = kDefaultNoiseSigma;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Range the calibration and benchmark draw blurs from.
struct BlurRange {
  double sigma0_min = 0.3;
  double sigma0_max = 4.0;
  double rho_min = 0.15;
  double rho_max = 1.0;
};

/// sigma0 ~ U[sigma0_min, sigma0_max], rho ~ U[rho_min, rho_max],
/// theta ~ U[0, pi); the noise seed is drawn from the same stream.
BlurSample draw_blur_sample(std::uint64_t seed, double noise_sigma = kDefaultNoiseSigma, const BlurRange& range = {});

/// Image blurred by the Gaussian of params (separable passes when possible,
/// otherwise the Fourier engine), edges replicated.
Image gaussian_blur(const Image& image, const GaussianParams& params);

/// gaussian_blur, plus white Gaussian noise seeded by sample.seed, clamped
/// to [0, 1]. Bit-identical for equal inputs.
Image synthesize_blurry(const Image& sharp, const BlurSample& sample);

/// Mix two 64-bit values into a well-spread seed for per-item streams.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace mildblur
