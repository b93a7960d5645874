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

#include <cmath>
#include <limits>

#include "mildblur/metrics.hpp"
#include "test_util.hpp"

namespace mildblur {
namespace {

// SSIM from explicit 11x11 window sums at every valid position.
double reference_ssim(const Image& a, const Image& b) {
  const int r = 5;
  double w[11][11];
  double total = 0.0;
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) {
      w[i][j] = std::exp(-((i - r) * (i - r) + (j - r) * (j - r)) / (2.0 * 1.5 * 1.5));
      total += w[i][j];
    }
  }
  const double c1 = 1e-4, c2 = 9e-4;
  double acc = 0.0;
  for (int c = 0; c < a.channels(); ++c) {
    double sum = 0.0;
    int count = 0;
    for (int y = r; y < a.height() - r; ++y) {
      for (int x = r; x < a.width() - r; ++x) {
        double mx = 0, my = 0, xx = 0, yy = 0, xy = 0;
        for (int i = 0; i < 11; ++i) {
          for (int j = 0; j < 11; ++j) {
            const double g = w[i][j] / total;
            const double p = a.at(x + j - r, y + i - r, c);
            const double q = b.at(x + j - r, y + i - r, c);
            mx += g * p;
            my += g * q;
            xx += g * p * p;
            yy += g * q * q;
            xy += g * p * q;
          }
        }
        const double vx = xx - mx * mx, vy = yy - my * my, cxy = xy - mx * my;
        sum += (2 * mx * my + c1) * (2 * cxy + c2) / ((mx * mx + my * my + c1) * (vx + vy + c2));
        ++count;
      }
    }
    acc += sum / count;
  }
  return acc / a.channels();
}

TEST(Psnr, IdenticalIsInfinite) {
  const Image a = testing::test_pattern(20, 20, 1);
  EXPECT_EQ(psnr(a, a), std::numeric_limits<double>::infinity());
}

TEST(Psnr, ConstantOffsetIsTwentyDb) {
  const Image a(16, 16, 3, 0.25f);
  const Image b(16, 16, 3, 0.35f);
  EXPECT_NEAR(psnr(a, b), 20.0, 1e-5);
}

TEST(Psnr, DimensionMismatch) {
  EXPECT_THROW(psnr(Image(4, 4), Image(4, 5)), std::invalid_argument);
  EXPECT_THROW(psnr(Image(4, 4, 1), Image(4, 4, 3)), std::invalid_argument);
}

TEST(Ssim, IdenticalIsOne) {
  const Image a = testing::test_pattern(32, 24, 2, 3);
  EXPECT_NEAR(ssim(a, a), 1.0, 1e-12);
}

TEST(Ssim, MatchesExplicitWindowSums) {
  for (int seed : {1, 2, 3}) {
    const Image a = testing::test_pattern(30, 26, seed, seed == 2 ? 3 : 1);
    Image b = testing::test_pattern(30, 26, seed + 10, a.channels());
    b = add(scale(a, 0.7f), scale(b, 0.3f));
    EXPECT_NEAR(ssim(a, b), reference_ssim(a, b), 1e-9) << seed;
  }
}

TEST(Ssim, Symmetric) {
  const Image a = testing::test_pattern(40, 40, 4, 3);
  const Image b = testing::test_pattern(40, 40, 5, 3);
  EXPECT_NEAR(ssim(a, b), ssim(b, a), 1e-9);
}

TEST(Ssim, DegradationLowersScore) {
  const Image a = testing::test_pattern(40, 40, 6);
  Image noisy = a;
  std::mt19937 rng(3);
  std::normal_distribution<float> n(0.0f, 0.05f);
  for (float& v : noisy.samples()) v += n(rng);
  EXPECT_LT(ssim(a, noisy), 0.95);
  EXPECT_THROW(ssim(Image(10, 40), Image(10, 40)), std::invalid_argument);
}

}  // namespace
}  // namespace mildblur
