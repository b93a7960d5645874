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

#include <iosfwd>
#include <numbers>
#include <string>
#include <vector>

namespace mildblur {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kDefaultTruncation = 4.0;

/// Anisotropic Gaussian blur: standard deviation sigma0 along the major axis,
/// sigma1 = rho * sigma0 across it, major axis at angle theta from the
/// horizontal (counter-clockwise, see gradient.hpp).
struct GaussianParams {
  double sigma0 = 1.0;
  double rho = 1.0;
  double theta = 0.0;

  double sigma1() const { return rho * sigma0; }

  /// Throws std::invalid_argument unless sigma0 > 0, 0 < rho <= 1, theta in [0, pi).
  void validate() const;

  friend bool operator==(const GaussianParams&, const GaussianParams&) = default;
};

/// Wrap an angle into [0, pi).
double wrap_angle_pi(double angle);

/// Square, odd-sided convolution kernel. taps are row-major; row i holds the
/// offset dy_row = i - radius (row index growing downwards).
struct Kernel {
  int side = 1;
  std::vector<double> taps{1.0};

  int radius() const { return side / 2; }
  double at(int row, int col) const { return taps[static_cast<std::size_t>(row) * side + col]; }
  double& at(int row, int col) { return taps[static_cast<std::size_t>(row) * side + col]; }
  double sum() const;

  static Kernel delta() { return Kernel{}; }
};

/// Sampled, normalized anisotropic Gaussian over a square support of side
/// 2 * ceil(truncation * sigma0) + 1.
Kernel make_gaussian_kernel(const GaussianParams& params, double truncation = kDefaultTruncation);

/// Exponent a x^2 + 2 b x y + c y^2 of the kernel, x the column offset and y
/// the row offset (downwards).
struct QuadraticForm {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};
QuadraticForm gaussian_quadratic_form(const GaussianParams& params);

/// Normalized, sampled 1-D Gaussian with the given radius.
std::vector<double> gaussian_taps_1d(double sigma, int radius);

/// Plain-text kernel format: the side on the first line, then one row of
/// whitespace separated taps per line.
void write_kernel_text(const Kernel& kernel, std::ostream& os);
Kernel read_kernel_text(std::istream& is);

/// Horizontal line kernel of `length` (odd) equal taps, used as a
/// non-Gaussian example blur.
Kernel make_motion_kernel(int length);

}  // namespace mildblur
