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

#include "mildblur/image.hpp"

namespace mildblur {

// Orientation convention used throughout the library: x grows with the column
// index, y grows *upwards* on screen (against the row index). Angles are
// measured counter-clockwise from the horizontal as the image is viewed, so
// direction psi is the unit vector (cos psi, sin psi) in (x, y).

/// Partial derivatives of a 1-channel image. gy is d/dy with y pointing up,
/// i.e. the negated derivative along the row index.
struct GradientField {
  Image gx;
  Image gy;
};

/// 3-tap central differences in the interior, one-sided differences on the
/// first and last column/row. Requires a 1-channel image.
GradientField gradient(const Image& image);

/// max over pixels of |gx cos(psi) + gy sin(psi)|, ignoring `border` pixels
/// on each side.
double directional_derivative_max(const GradientField& grad, double psi, int border = 0);

struct QuantileNormalized {
  Image image;
  double lo = 0.0;
  double hi = 1.0;
};

/// clamp((image - lo) / (hi - lo), 0, 1) with lo, hi the q and 1 - q sample
/// quantiles (linear interpolation between order statistics). Throws
/// DegenerateInputError when hi == lo.
QuantileNormalized quantile_normalize(const Image& image, double q);

}  // namespace mildblur
