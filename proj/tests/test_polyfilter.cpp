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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mildblur/convolve.hpp"
#include "mildblur/polyfilter.hpp"
#include "test_util.hpp"

namespace mildblur {
namespace {

TEST(SolveP3, TruncatedSeriesMember) {
  const auto p = solve_p3(2.0, 4.0);
  ASSERT_EQ(p.coeffs.size(), 4u);
  EXPECT_EQ(p.coeffs[0], 4.0);
  EXPECT_EQ(p.coeffs[1], -6.0);
  EXPECT_EQ(p.coeffs[2], 4.0);
  EXPECT_EQ(p.coeffs[3], -1.0);
}

TEST(SolveP3, DefaultMember) {
  const auto p = solve_p3(kDefaultAlpha, kDefaultB);
  EXPECT_EQ(p.coeffs, (std::vector<double>{1.0, 5.0, -9.0, 4.0}));
}

TEST(SolveP3, ConstraintsOnRandomParams) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ua(-10.0, 20.0), ub(0.0, 6.0);
  for (int i = 0; i < 100; ++i) {
    const double alpha = ua(rng), b = ub(rng);
    const auto p = solve_p3(alpha, b);
    double sum = 0.0;
    for (double c : p.coeffs) sum += c;
    EXPECT_NEAR(sum, 1.0, 1e-10);
    EXPECT_NEAR(eval_poly(p, 0.0), b, 1e-10);
    EXPECT_NEAR(eval_poly_derivative(p, 1, 1.0), -1.0, 1e-10);
    EXPECT_NEAR(eval_poly_derivative(p, 2, 1.0), alpha, 1e-10);
  }
}

TEST(SolveGeneral, AgreesWithClosedFormAtDegreeThree) {
  for (double alpha : {-4.0, 2.0, 6.0, 16.0}) {
    for (double b : {0.0, 1.0, 4.0}) {
      const auto g = solve_general({3, alpha, b});
      const auto c = solve_p3(alpha, b);
      for (int i = 0; i <= 3; ++i) EXPECT_NEAR(g.coeffs[i], c.coeffs[i], 1e-12);
    }
  }
}

class GeneralDegree : public ::testing::TestWithParam<int> {};

TEST_P(GeneralDegree, ConstraintsByFiniteDifferences) {
  const int d = GetParam();
  for (const auto& [alpha, b] : {std::pair{3.0, 1.0}, std::pair{-7.5, 2.5}, std::pair{24.0, 0.0}}) {
    const auto p = solve_general({d, alpha, b});
    ASSERT_EQ(p.degree(), d);
    EXPECT_NEAR(eval_poly(p, 1.0), 1.0, 1e-10);
    EXPECT_NEAR(eval_poly(p, 0.0), b, 1e-10);
    double fact = 1.0;
    for (int i = 1; i <= d - 2; ++i) {
      fact *= i;
      const double want = (i % 2 == 0 ? 1.0 : -1.0) * fact;
      EXPECT_NEAR(testing::stencil_derivative(p.coeffs, i, 1.0, d + 1, 0.25), want, 1e-8) << "order " << i;
      EXPECT_NEAR(eval_poly_derivative(p, i, 1.0), want, 1e-9) << "order " << i;
    }
    EXPECT_NEAR(testing::stencil_derivative(p.coeffs, d - 1, 1.0, d + 1, 0.25), alpha, 1e-8);
  }
}

INSTANTIATE_TEST_SUITE_P(Degrees, GeneralDegree, ::testing::Range(2, 7));

TEST(SolveGeneral, RejectsBadInput) {
  EXPECT_THROW(solve_general({1, 1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(solve_general({3, NAN, 1.0}), std::invalid_argument);
}

TEST(Curves, CsvShape) {
  const std::string csv = response_curve_csv(solve_p3(6.0, 1.0));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,p,px");
  std::getline(in, line);
  EXPECT_EQ(line, "0.00000000,1.0000000000,0.0000000000");
  int rows = 1;
  std::string last;
  while (std::getline(in, line)) {
    ++rows;
    last = line;
  }
  EXPECT_EQ(rows, 257);
  EXPECT_EQ(last, "1.00000000,1.0000000000,1.0000000000");
}

TEST(Curves, MaxAbsOnUnit) {
  // 4 - 6x + 4x^2 - x^3 is decreasing on [0, 1] from 4 to 1.
  EXPECT_NEAR(max_abs_on_unit(solve_p3(2.0, 4.0)), 4.0, 1e-12);
}

TEST(Apply, IdentityOperatorSumsCoefficients) {
  const Image img = testing::test_pattern(12, 9, 1);
  const Image out = apply_poly_with(img, solve_p3(7.0, 2.0), [](const Image& v) { return v; });
  EXPECT_LT(testing::max_diff(out, img), 1e-5);
}

TEST(Apply, ConstantImagePreserved) {
  const Image img(40, 40, 3, 0.6f);
  const auto p = solve_p3(6.0, 1.0);
  EXPECT_LT(testing::max_diff(apply_poly_spatial(img, {1.5, 0.4, 0.3}, p), img), 1e-5);
  EXPECT_LT(testing::max_diff(apply_poly_fourier(img, make_gaussian_kernel({1.5, 0.4, 0.3}), p), img), 1e-5);
}

// Horner application equals one convolution with the explicit kernel
// sum a_i K^i away from the borders, and the Fourier path agrees with both.
class PolyOracle : public ::testing::TestWithParam<double> {};

TEST_P(PolyOracle, HornerExplicitAndFourierAgree) {
  const double sigma = GetParam();
  const GaussianParams params{sigma, 0.6, 0.5};
  const Kernel k = make_gaussian_kernel(params);
  const auto p = solve_p3(6.0, 1.0);
  const Image img = testing::test_pattern(3 * k.side + 24, 3 * k.side + 20, 40 + static_cast<int>(sigma * 10));
  const Image horner = apply_poly_spatial(img, params, p);
  const Image expl = testing::reference_convolve(img, testing::explicit_poly_kernel(k, p.coeffs));
  const Image fourier = apply_poly_fourier(img, k, p);
  const int margin = 3 * k.radius();
  EXPECT_LT(testing::interior_max_diff(horner, expl, margin), 1e-4);
  EXPECT_LT(testing::interior_max_diff(horner, fourier, margin), 1e-3);
}

INSTANTIATE_TEST_SUITE_P(Sigmas, PolyOracle, ::testing::Values(0.5, 1.5, 3.0));

TEST(Spectrum, CorrectionsGiveRealNonNegativeBase) {
  // Shifted kernel: its spectrum carries a linear phase.
  Kernel k = make_gaussian_kernel({1.0, 0.5, 0.8});
  std::rotate(k.taps.begin(), k.taps.begin() + 1, k.taps.end());
  const auto raw = effective_base_spectrum(k, 16, 16, SpectrumCorrection::none);
  const auto flip = effective_base_spectrum(k, 16, 16, SpectrumCorrection::flip);
  const auto phase = effective_base_spectrum(k, 16, 16, SpectrumCorrection::phase);
  double max_imag = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    max_imag = std::max(max_imag, std::abs(raw[i].imag()));
    EXPECT_NEAR(flip[i].real(), std::norm(raw[i]), 1e-12);
    EXPECT_NEAR(phase[i].real(), std::abs(raw[i]), 1e-12);
    EXPECT_EQ(flip[i].imag(), 0.0);
    EXPECT_EQ(phase[i].imag(), 0.0);
  }
  EXPECT_GT(max_imag, 1e-3);
}

TEST(Spectrum, PhaseCorrectionUndoesShift) {
  // Blur with a shifted kernel and deblur with that same kernel: the
  // phase-corrected result matches the unshifted case, the plain one does
  // not.
  const Kernel k = make_gaussian_kernel({1.2, 0.5, 0.4});
  Kernel shifted;
  shifted.side = k.side + 2;
  shifted.taps.assign(static_cast<std::size_t>(shifted.side) * shifted.side, 0.0);
  for (int i = 0; i < k.side; ++i)
    for (int j = 0; j < k.side; ++j) shifted.at(i + 1, j + 2) = k.at(i, j);  // +1 column offset
  const auto p = solve_p3(6.0, 1.0);
  const Image img = testing::test_pattern(64, 64, 8);
  const Image ref = apply_poly_fourier(convolve(img, k), k, p, SpectrumCorrection::phase);
  const Image blurry = convolve(img, shifted);
  const Image corr = apply_poly_fourier(blurry, shifted, p, SpectrumCorrection::phase);
  const Image plain = apply_poly_fourier(blurry, shifted, p, SpectrumCorrection::none);
  EXPECT_LT(testing::interior_max_diff(ref, corr, 16), 1e-4);
  EXPECT_GT(testing::interior_max_diff(ref, plain, 16), 1e-2);
}

TEST(Spectrum, FlipMatchesSymmetricSquare) {
  // For a symmetric kernel, flip correction is p(K^2) K.
  const Kernel k = make_gaussian_kernel({0.9, 0.7, 1.0});
  const auto p = solve_p3(4.0, 1.0);
  std::vector<double> lifted(2 * p.coeffs.size(), 0.0);  // q(x) = x p(x^2)
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) lifted[2 * i + 1] = p.coeffs[i];
  const Image img = testing::test_pattern(100, 100, 9);
  const Image flip = apply_poly_fourier(img, k, p, SpectrumCorrection::flip);
  const Image direct = apply_poly_spatial(img, {0.9, 0.7, 1.0}, PolyCoefficients{lifted});
  EXPECT_LT(testing::interior_max_diff(flip, direct, 32), 1e-4);
}

}  // namespace
}  // namespace mildblur
