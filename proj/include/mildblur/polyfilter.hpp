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

// Deblurring filters built as polynomials of the blur operator,
//
//     p(K) = a_0 I + a_1 K + ... + a_d K^d.
//
// Under convolution the filter's frequency response is the same polynomial of
// the blur's frequency response, so p is designed on [0, 1]: p(1) = 1 keeps
// the mean, p matches the derivatives of 1/x at x = 1 up to order d - 2, and
// the two remaining degrees of freedom are alpha = p^(d-1)(1) (mid-frequency
// gain) and b = p(0) (gain on fully attenuated frequencies).
#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "mildblur/image.hpp"
#include "mildblur/kernel.hpp"

namespace mildblur {

inline constexpr double kDefaultAlpha = 6.0;
inline constexpr double kDefaultB = 1.0;

struct PolyParams {
  int degree = 3;
  double alpha = kDefaultAlpha;
  double b = kDefaultB;
};

/// Ascending-power coefficients a_0 .. a_d.
struct PolyCoefficients {
  std::vector<double> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// Closed-form degree-3 member: (b, 5 - 3b + alpha/2, 3b - alpha - 6, alpha/2 - b + 2).
PolyCoefficients solve_p3(double alpha, double b);

/// Degree-d member for any d >= 2. Solved in the basis (x - 1)^j, where every
/// constraint at x = 1 fixes one coefficient, then expanded to monomials.
PolyCoefficients solve_general(const PolyParams& params);

/// Horner evaluation of p(x).
double eval_poly(const PolyCoefficients& p, double x);

/// i-th derivative of p at x, evaluated exactly from the coefficients.
double eval_poly_derivative(const PolyCoefficients& p, int order, double x);

/// max |p(x)| over a fine grid of [0, 1].
double max_abs_on_unit(const PolyCoefficients& p);

/// CSV with header "x,p,px" over x = k/256, k = 0..256.
std::string response_curve_csv(const PolyCoefficients& p);

/// Image -> image linear blur operator.
using BlurOperator = std::function<Image(const Image&)>;

/// Horner-style accumulation with exactly d applications of `blur`:
/// v_0 = a_d v, v_i = blur(v_{i-1}) + a_{d-i} v.
Image apply_poly_with(const Image& image, const PolyCoefficients& p, const BlurOperator& blur);

/// apply_poly_with using the Gaussian blur: separable two-pass when the
/// params are axis-aligned or isotropic, direct 2-D convolution otherwise.
Image apply_poly_spatial(const Image& image, const GaussianParams& params, const PolyCoefficients& p);

enum class SpectrumCorrection { none, flip, phase };

inline constexpr double kPhaseEpsilon = 1e-8;

/// Frequency-domain application. With base spectrum h:
///   none:  out = p(k^) X
///   flip:  out = p(|k^|^2) conj(k^) X
///   phase: out = p(|k^|) conj(k^) / max(|k^|, eps) X
/// The image is edge-replicated into a periodic grid with enough margin for
/// the whole polynomial filter. Throws std::invalid_argument for an all-zero
/// kernel.
Image apply_poly_fourier(const Image& image, const Kernel& kernel, const PolyCoefficients& p,
                         SpectrumCorrection correction = SpectrumCorrection::none);

/// The effective base spectrum the polynomial is evaluated on, on a
/// rows x cols grid in the full (non-Hermitian-reduced) layout.
std::vector<std::complex<double>> effective_base_spectrum(const Kernel& kernel, int rows, int cols,
                                                          SpectrumCorrection correction);

}  // namespace mildblur
