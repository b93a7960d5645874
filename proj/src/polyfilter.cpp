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

#include "mildblur/polyfilter.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "fft.hpp"
#include "mildblur/convolve.hpp"

namespace mildblur {

PolyCoefficients solve_p3(double alpha, double b) {
  return PolyCoefficients{{b, 5.0 - 3.0 * b + alpha / 2.0, 3.0 * b - alpha - 6.0, alpha / 2.0 - b + 2.0}};
}

PolyCoefficients solve_general(const PolyParams& params) {
  const int d = params.degree;
  if (d < 2) throw std::invalid_argument("solve_general: degree must be at least 2");
  if (!std::isfinite(params.alpha) || !std::isfinite(params.b)) {
    throw std::invalid_argument("solve_general: alpha and b must be finite");
  }

  // p(x) = sum_j s_j (x - 1)^j, so p^(i)(1) = i! s_i.
  std::vector<double> shifted(static_cast<std::size_t>(d + 1), 0.0);
  shifted[0] = 1.0;
  for (int i = 1; i <= d - 2; ++i) shifted[i] = (i % 2 == 0) ? 1.0 : -1.0;
  double factorial = 1.0;
  for (int i = 2; i <= d - 1; ++i) factorial *= i;
  shifted[d - 1] = params.alpha / factorial;
  // p(0) = sum_j s_j (-1)^j = b fixes the leading coefficient.
  double at_zero = 0.0;
  for (int j = 0; j < d; ++j) at_zero += (j % 2 == 0) ? shifted[j] : -shifted[j];
  shifted[d] = (d % 2 == 0) ? (params.b - at_zero) : (at_zero - params.b);

  // (x - 1)^j = sum_k C(j, k) x^k (-1)^(j - k)
  PolyCoefficients out;
  out.coeffs.assign(static_cast<std::size_t>(d + 1), 0.0);
  for (int j = 0; j <= d; ++j) {
    double binom = 1.0;
    for (int k = 0; k <= j; ++k) {
      const double sign = ((j - k) % 2 == 0) ? 1.0 : -1.0;
      out.coeffs[k] += shifted[j] * binom * sign;
      binom = binom * (j - k) / (k + 1);
    }
  }
  return out;
}

double eval_poly(const PolyCoefficients& p, double x) {
  double acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval_poly_derivative(const PolyCoefficients& p, int order, double x) {
  std::vector<double> c = p.coeffs;
  for (int o = 0; o < order; ++o) {
    if (c.size() <= 1) return 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<double>(i);
    c.pop_back();
  }
  return eval_poly(PolyCoefficients{c}, x);
}

double max_abs_on_unit(const PolyCoefficients& p) {
  constexpr int kSteps = 4096;
  double best = 0.0;
  for (int k = 0; k <= kSteps; ++k) best = std::max(best, std::abs(eval_poly(p, static_cast<double>(k) / kSteps)));
  return best;
}

std::string response_curve_csv(const PolyCoefficients& p) {
  std::string out = "x,p,px\n";
  char line[128];
  for (int k = 0; k <= 256; ++k) {
    const double x = k / 256.0;
    const double px = eval_poly(p, x);
    std::snprintf(line, sizeof(line), "%.8f,%.10f,%.10f\n", x, px, px * x);
    out += line;
  }
  return out;
}

Image apply_poly_with(const Image& image, const PolyCoefficients& p, const BlurOperator& blur) {
  if (p.coeffs.empty()) throw std::invalid_argument("apply_poly: empty coefficient vector");
  const int d = p.degree();
  Image acc = scale(image, static_cast<float>(p.coeffs[d]));
  for (int i = 1; i <= d; ++i) {
    acc = blur(acc);
    const float a = static_cast<float>(p.coeffs[d - i]);
    auto dst = acc.samples();
    const auto src = image.samples();
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += a * src[k];
  }
  return acc;
}

Image apply_poly_spatial(const Image& image, const GaussianParams& params, const PolyCoefficients& p) {
  if (is_separable(params)) {
    return apply_poly_with(image, p, [&](const Image& v) { return separable_gaussian(v, params); });
  }
  const Kernel k = make_gaussian_kernel(params);
  return apply_poly_with(image, p, [&](const Image& v) { return convolve(v, k, ConvolutionEngine::spatial); });
}

namespace {

using detail::Complex;

Complex eval_poly_complex(const PolyCoefficients& p, Complex x) {
  Complex acc = 0.0;
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex corrected_base(Complex k, SpectrumCorrection correction) {
  switch (correction) {
    case SpectrumCorrection::none:
      return k;
    case SpectrumCorrection::flip:
      return std::norm(k);
    case SpectrumCorrection::phase:
      return std::abs(k);
  }
  return k;
}

Complex correction_filter(Complex k, SpectrumCorrection correction) {
  switch (correction) {
    case SpectrumCorrection::none:
      return 1.0;
    case SpectrumCorrection::flip:
      return std::conj(k);
    case SpectrumCorrection::phase:
      return std::conj(k) / std::max(std::abs(k), kPhaseEpsilon);
  }
  return 1.0;
}

void require_nonzero(const Kernel& kernel) {
  if (std::ranges::all_of(kernel.taps, [](double t) { return t == 0.0; })) {
    throw std::invalid_argument("apply_poly_fourier: all-zero kernel");
  }
}

}  // namespace

Image apply_poly_fourier(const Image& image, const Kernel& kernel, const PolyCoefficients& p,
                         SpectrumCorrection correction) {
  require_nonzero(kernel);
  if (p.coeffs.empty()) throw std::invalid_argument("apply_poly_fourier: empty coefficient vector");
  const int r = kernel.radius();
  // Support of p(K) plus the correction filter, never less than one kernel side.
  const int pad = std::max(kernel.side, (p.degree() + 1) * r + 1);
  const auto grid = detail::make_padded_grid(image.width(), image.height(), pad);
  auto transfer = detail::kernel_half_spectrum(kernel, grid.rows, grid.cols);
  for (Complex& k : transfer) {
    k = eval_poly_complex(p, corrected_base(k, correction)) * correction_filter(k, correction);
  }
  return detail::apply_transfer(image, grid, transfer);
}

std::vector<std::complex<double>> effective_base_spectrum(const Kernel& kernel, int rows, int cols,
                                                          SpectrumCorrection correction) {
  require_nonzero(kernel);
  auto full = kernel_spectrum(kernel, rows, cols);
  for (auto& k : full) k = corrected_base(k, correction);
  return full;
}

}  // namespace mildblur
