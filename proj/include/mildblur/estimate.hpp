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

// Blind estimation of a global anisotropic Gaussian blur from the extrema of
// directional derivatives.
//
// For every sampled direction psi the feature f_psi is the largest absolute
// directional derivative in the image. Blur along the major axis flattens
// edges the most in that direction, so the major axis is where f_psi is
// smallest, and the blur strength along an axis follows
//
//     sigma = sqrt(c^2 / f^2 - sigma_b^2)
//
// where c and sigma_b (the blur the discrete gradient itself introduces) are
// fitted offline by calibrate().
#pragma once

#include <vector>

#include "mildblur/gradient.hpp"
#include "mildblur/image.hpp"
#include "mildblur/kernel.hpp"

namespace mildblur {

inline constexpr double kSigmaMin = 0.3;
inline constexpr double kSigmaMax = 4.0;
inline constexpr int kDefaultAngles = 6;
inline constexpr double kDefaultQuantile = 1e-4;
/// Pixels ignored on each side when taking gradient maxima.
inline constexpr int kFeatureBorder = 2;

struct DirectionalFeatures {
  std::vector<double> angles;  // j * pi / m
  std::vector<double> values;  // f_psi, max |d/dpsi|
};

struct CalibrationParams {
  double c_slope = 0.0;
  double sigma_b = 0.0;

  void validate() const;
};

/// CalibrationParams shipped with the library (see data/default_calibration.json).
CalibrationParams default_calibration();

struct EstimatorConfig {
  int angles = kDefaultAngles;
  double quantile = kDefaultQuantile;
};

struct ClampFlags {
  bool sigma0 = false;
  bool sigma1 = false;
};

struct BlurEstimate {
  GaussianParams params;
  double f_theta = 0.0;
  double f_theta_perp = 0.0;
  ClampFlags clamped;
};

/// values[j] = max |grad_{psi_j} v| for psi_j = j pi / m over the image with
/// a kFeatureBorder crop. Throws DegenerateInputError if every value is 0.
DirectionalFeatures compute_features(const Image& image, int m = kDefaultAngles);
DirectionalFeatures compute_features(const GradientField& grad, int m);

struct Extremum {
  double theta = 0.0;
  double f_theta = 0.0;
  double f_theta_perp = 0.0;
};

/// Periodic cubic-convolution (Keys, a = -1/2) interpolant of the features,
/// minimized on a 1-degree grid; ties resolve to the smallest angle.
Extremum refine_extremum(const DirectionalFeatures& features);

/// The periodic interpolant used by refine_extremum, evaluated at `angle`.
double interpolate_features(const DirectionalFeatures& features, double angle);

struct SigmaPair {
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  ClampFlags clamped;
  /// sigma0 and sigma1 were exchanged to keep sigma0 >= sigma1; the estimated
  /// angle must then be rotated by pi/2.
  bool swapped = false;
};

/// sigma = sqrt(max(c^2/f^2 - sigma_b^2, sigma_min^2)) clamped into
/// [kSigmaMin, kSigmaMax]. Throws std::invalid_argument unless both f > 0.
SigmaPair features_to_sigmas(double f_theta, double f_theta_perp, const CalibrationParams& calib);

/// One axis of features_to_sigmas.
double feature_to_sigma(double f, const CalibrationParams& calib, bool* clamped = nullptr);

/// Luminance, quantile normalization, features, refinement and calibration
/// mapping. Requires at least 32x32 pixels.
BlurEstimate estimate_blur(const Image& image, const CalibrationParams& calib, const EstimatorConfig& config = {});

/// Only the calibration-independent part of estimate_blur: the refined
/// (theta, f_theta, f_theta_perp) of the normalized luminance.
Extremum measure_blur_features(const Image& image, const EstimatorConfig& config = {});

}  // namespace mildblur
