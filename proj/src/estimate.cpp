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

#include "mildblur/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mildblur/default_calibration.hpp"

namespace mildblur {

void CalibrationParams::validate() const {
  if (!(c_slope > 0.0) || !std::isfinite(c_slope)) throw std::invalid_argument("c_slope must be positive");
  if (!(sigma_b >= 0.0) || !std::isfinite(sigma_b)) throw std::invalid_argument("sigma_b must be non-negative");
}

CalibrationParams default_calibration() {
  return CalibrationParams{generated::kDefaultCSlope, generated::kDefaultSigmaB};
}

DirectionalFeatures compute_features(const GradientField& grad, int m) {
  if (m < 3) throw std::invalid_argument("compute_features: need at least 3 angles");
  DirectionalFeatures f;
  f.angles.resize(static_cast<std::size_t>(m));
  f.values.resize(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    f.angles[j] = j * kPi / m;
    f.values[j] = directional_derivative_max(grad, f.angles[j], kFeatureBorder);
  }
  if (std::ranges::all_of(f.values, [](double v) { return v == 0.0; })) {
    throw DegenerateInputError("compute_features: image has no gradients");
  }
  return f;
}

DirectionalFeatures compute_features(const Image& image, int m) {
  return compute_features(gradient(luminance(image)), m);
}

namespace {

double keys_weight(double x) {
  constexpr double a = -0.5;
  x = std::abs(x);
  if (x <= 1.0) return ((a + 2.0) * x - (a + 3.0)) * x * x + 1.0;
  if (x < 2.0) return ((a * x - 5.0 * a) * x + 8.0 * a) * x - 4.0 * a;
  return 0.0;
}

}  // namespace

double interpolate_features(const DirectionalFeatures& features, double angle) {
  const int m = static_cast<int>(features.values.size());
  const double t = wrap_angle_pi(angle) / (kPi / m);
  const int base = static_cast<int>(std::floor(t));
  const double frac = t - base;
  double value = 0.0;
  for (int k = -1; k <= 2; ++k) {
    const int idx = ((base + k) % m + m) % m;
    value += features.values[idx] * keys_weight(frac - k);
  }
  return value;
}

Extremum refine_extremum(const DirectionalFeatures& features) {
  if (features.values.size() < 4) throw std::invalid_argument("refine_extremum: need at least 4 angles");
  constexpr int kSteps = 180;
  Extremum best;
  double best_value = 0.0;
  for (int k = 0; k < kSteps; ++k) {
    const double angle = k * kPi / kSteps;
    const double v = interpolate_features(features, angle);
    // Only a clear improvement moves the minimum, so that rounding noise on
    // flat feature curves cannot break ties.
    if (k == 0 || v < best_value - 1e-12 * std::abs(best_value)) {
      best_value = v;
      best.theta = angle;
    }
  }
  best.f_theta = best_value;
  best.f_theta_perp = interpolate_features(features, best.theta + kPi / 2.0);
  return best;
}

double feature_to_sigma(double f, const CalibrationParams& calib, bool* clamped) {
  if (!(f > 0.0)) throw std::invalid_argument("feature_to_sigma: feature must be positive");
  const double radicand = calib.c_slope * calib.c_slope / (f * f) - calib.sigma_b * calib.sigma_b;
  bool hit = false;
  double sigma = 0.0;
  if (radicand < kSigmaMin * kSigmaMin) {
    sigma = kSigmaMin;
    hit = true;
  } else {
    sigma = std::sqrt(radicand);
    if (sigma > kSigmaMax) {
      sigma = kSigmaMax;
      hit = true;
    }
  }
  if (clamped != nullptr) *clamped = hit;
  return sigma;
}

SigmaPair features_to_sigmas(double f_theta, double f_theta_perp, const CalibrationParams& calib) {
  SigmaPair out;
  out.sigma0 = feature_to_sigma(f_theta, calib, &out.clamped.sigma0);
  out.sigma1 = feature_to_sigma(f_theta_perp, calib, &out.clamped.sigma1);
  if (out.sigma1 > out.sigma0) {
    std::swap(out.sigma0, out.sigma1);
    std::swap(out.clamped.sigma0, out.clamped.sigma1);
    out.swapped = true;
  }
  return out;
}

Extremum measure_blur_features(const Image& image, const EstimatorConfig& config) {
  if (image.width() < 32 || image.height() < 32) {
    throw std::invalid_argument("estimate_blur: image must be at least 32x32");
  }
  const auto normalized = quantile_normalize(luminance(image), config.quantile);
  const auto features = compute_features(gradient(normalized.image), config.angles);
  return refine_extremum(features);
}

BlurEstimate estimate_blur(const Image& image, const CalibrationParams& calib, const EstimatorConfig& config) {
  calib.validate();
  const Extremum ext = measure_blur_features(image, config);
  if (!(ext.f_theta > 0.0) || !(ext.f_theta_perp > 0.0)) {
    throw DegenerateInputError("estimate_blur: vanishing gradient feature");
  }
  const SigmaPair sigmas = features_to_sigmas(ext.f_theta, ext.f_theta_perp, calib);

  BlurEstimate est;
  est.f_theta = ext.f_theta;
  est.f_theta_perp = ext.f_theta_perp;
  est.clamped = sigmas.clamped;
  est.params.sigma0 = sigmas.sigma0;
  est.params.rho = std::clamp(sigmas.sigma1 / sigmas.sigma0, 1e-6, 1.0);
  est.params.theta = wrap_angle_pi(sigmas.swapped ? ext.theta + kPi / 2.0 : ext.theta);
  if (sigmas.swapped) std::swap(est.f_theta, est.f_theta_perp);
  return est;
}

}  // namespace mildblur
