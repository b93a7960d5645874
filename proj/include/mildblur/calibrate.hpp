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
#include <vector>

#include "mildblur/estimate.hpp"
#include "mildblur/image.hpp"
#include "mildblur/synth.hpp"

namespace mildblur {

/// One simulated blur and what the estimator measured on it.
struct CalibrationSample {
  GaussianParams truth;
  Extremum measured;
};

struct CalibrationResult {
  CalibrationParams params;
  /// Mean |sigma0_hat - sigma0| over the samples at the fitted params.
  double mae = 0.0;
  int k = 0;
  std::uint64_t seed = 0;
  /// Simulated images dropped as degenerate.
  int skipped = 0;
  std::vector<CalibrationSample> samples;
};

struct CalibrationOptions {
  double noise_sigma = kDefaultNoiseSigma;
  BlurRange range;
  EstimatorConfig estimator;
};

inline constexpr int kMinCalibrationImages = 5;
inline constexpr int kMinCalibrationSamples = 100;

/// Simulate k blurry images (image k mod n, blur drawn from the range with
/// per-sample seeds derived from `seed`), measure their features and fit
/// (c_slope, sigma_b) with fit_calibration. Samples whose blurry image is
/// degenerate are skipped. Throws std::invalid_argument for fewer than 5
/// images or k < 100.
CalibrationResult calibrate(const std::vector<Image>& sharp, int k, std::uint64_t seed,
                            const CalibrationOptions& options = {});

/// Minimize mean |feature_to_sigma(f_theta) - sigma0| (with clamping): grid
/// search over c in [0.1, 2] and sigma_b in [0, 1.5] at step 0.01, then
/// coordinate descent with a halving step.
CalibrationResult fit_calibration(std::vector<CalibrationSample> samples);

/// Mean absolute sigma0 error of `samples` under `params`.
double calibration_mae(const std::vector<CalibrationSample>& samples, const CalibrationParams& params);

}  // namespace mildblur
