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

#include "mildblur/calibrate.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mildblur {
namespace {

constexpr double kGridStep = 0.01;
constexpr double kCMin = 0.1;
constexpr double kCMax = 2.0;
constexpr double kSigmaBMax = 1.5;
constexpr double kRefineStop = 1e-6;

double objective(const std::vector<CalibrationSample>& samples, double c, double sb) {
  const CalibrationParams p{c, sb};
  double sum = 0.0;
  for (const auto& s : samples) sum += std::abs(feature_to_sigma(s.measured.f_theta, p) - s.truth.sigma0);
  return sum / static_cast<double>(samples.size());
}

}  // namespace

double calibration_mae(const std::vector<CalibrationSample>& samples, const CalibrationParams& params) {
  if (samples.empty()) throw std::invalid_argument("calibration_mae: no samples");
  params.validate();
  return objective(samples, params.c_slope, params.sigma_b);
}

CalibrationResult fit_calibration(std::vector<CalibrationSample> samples) {
  if (samples.empty()) throw std::invalid_argument("fit_calibration: no samples");
  for (const auto& s : samples) {
    if (!(s.measured.f_theta > 0.0)) throw std::invalid_argument("fit_calibration: non-positive feature");
  }

  double best_c = kCMin;
  double best_sb = 0.0;
  double best = objective(samples, best_c, best_sb);
  const int nc = static_cast<int>(std::lround((kCMax - kCMin) / kGridStep));
  const int nb = static_cast<int>(std::lround(kSigmaBMax / kGridStep));
  for (int i = 0; i <= nc; ++i) {
    const double c = kCMin + i * kGridStep;
    for (int j = 0; j <= nb; ++j) {
      const double sb = j * kGridStep;
      const double e = objective(samples, c, sb);
      if (e < best) {
        best = e;
        best_c = c;
        best_sb = sb;
      }
    }
  }

  for (double step = kGridStep / 2.0; step > kRefineStop;) {
    bool moved = false;
    const std::pair<double, double> moves[] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const auto& [dc, db] : moves) {
      const double c = best_c + dc;
      const double sb = best_sb + db;
      if (c <= 0.0 || sb < 0.0) continue;
      const double e = objective(samples, c, sb);
      if (e < best) {
        best = e;
        best_c = c;
        best_sb = sb;
        moved = true;
      }
    }
    if (!moved) step /= 2.0;
  }

  CalibrationResult r;
  r.params = {best_c, best_sb};
  r.mae = best;
  r.k = static_cast<int>(samples.size());
  r.samples = std::move(samples);
  return r;
}

CalibrationResult calibrate(const std::vector<Image>& sharp, int k, std::uint64_t seed,
                            const CalibrationOptions& options) {
  if (static_cast<int>(sharp.size()) < kMinCalibrationImages) {
    throw std::invalid_argument("calibrate: at least 5 sharp images are required");
  }
  if (k < kMinCalibrationSamples) throw std::invalid_argument("calibrate: K must be at least 100");

  std::vector<CalibrationSample> samples;
  samples.reserve(static_cast<std::size_t>(k));
  int skipped = 0;
  for (int i = 0; i < k; ++i) {
    const BlurSample draw = draw_blur_sample(mix_seed(seed, static_cast<std::uint64_t>(i)), options.noise_sigma,
                                             options.range);
    const Image blurry = synthesize_blurry(sharp[static_cast<std::size_t>(i) % sharp.size()], draw);
    try {
      samples.push_back({draw.params, measure_blur_features(blurry, options.estimator)});
    } catch (const DegenerateInputError&) {
      ++skipped;
    }
  }
  if (samples.empty()) throw DegenerateInputError("calibrate: every simulated image was degenerate");
  CalibrationResult r = fit_calibration(std::move(samples));
  r.k = k;
  r.seed = seed;
  r.skipped = skipped;
  return r;
}

}  // namespace mildblur
