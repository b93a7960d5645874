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

#include "mildblur/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "mildblur/convolve.hpp"

namespace mildblur {

void BlurSample::validate() const {
  params.validate();
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw std::invalid_argument("noise_sigma must be finite and non-negative");
  }
}

BlurSample draw_blur_sample(std::uint64_t seed, double noise_sigma, const BlurRange& range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  BlurSample s;
  s.params.sigma0 = range.sigma0_min + (range.sigma0_max - range.sigma0_min) * u01(rng);
  s.params.rho = range.rho_min + (range.rho_max - range.rho_min) * u01(rng);
  s.params.theta = kPi * u01(rng);
  if (s.params.theta >= kPi) s.params.theta = 0.0;
  s.noise_sigma = noise_sigma;
  s.seed = rng();
  return s;
}

Image gaussian_blur(const Image& image, const GaussianParams& params) {
  params.validate();
  if (is_separable(params)) return separable_gaussian(image, params);
  const Kernel k = make_gaussian_kernel(params);
  const bool fits = k.side <= std::min(image.width(), image.height());
  if (!fits) throw std::invalid_argument("gaussian_blur: kernel larger than image");
  return convolve(image, k, ConvolutionEngine::fourier);
}

Image synthesize_blurry(const Image& sharp, const BlurSample& sample) {
  sample.validate();
  Image out = gaussian_blur(sharp, sample.params);
  if (sample.noise_sigma > 0.0) {
    std::mt19937_64 rng(sample.seed);
    std::normal_distribution<double> noise(0.0, sample.noise_sigma);
    for (float& v : out.samples()) v = static_cast<float>(v + noise(rng));
  }
  return clamp(out);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined word.
  std::uint64_t z = a * 0x9E3779B97F4A7C15ull + b + 0x632BE59BD9B4E019ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace mildblur
