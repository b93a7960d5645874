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

#include "mildblur/convolve.hpp"
#include "mildblur/halo.hpp"
#include "mildblur/polyfilter.hpp"
#include "mildblur/scenes.hpp"
#include "test_util.hpp"

namespace mildblur {
namespace {

// Central difference along the row, one-sided at the ends.
double dx(const Image& img, int x, int y) {
  const int w = img.width();
  if (x == 0) return img.at(1, y) - img.at(0, y);
  if (x == w - 1) return img.at(w - 1, y) - img.at(w - 2, y);
  return 0.5 * (img.at(x + 1, y) - img.at(x - 1, y));
}

// A blurred step and a strongly oversharpened copy of it.
struct StepPair {
  Image v, vbar;
};

StepPair oversharpened_step() {
  const Image step = step_edge(64, 1, 32, 0.2f, 0.8f);
  const Image v = separable_gaussian(step, {2.0, 1.0, 0.0});
  // Deblurring for a larger blur than the actual one overshoots.
  const Image vbar = apply_poly_spatial(v, {3.0, 1.0, 0.0}, solve_p3(16.0, 1.0));
  return {v, vbar};
}

TEST(Halo, StepIsOversharpened) {
  const auto [v, vbar] = oversharpened_step();
  int reversed = 0;
  for (int x = 0; x < v.width(); ++x) reversed += dx(v, x, 0) * dx(vbar, x, 0) < -1e-6;
  EXPECT_GT(reversed, 0);
}

TEST(Halo, BlendRemovesReversal) {
  const auto [v, vbar] = oversharpened_step();
  const auto [vz, mask] = blend(v, vbar);
  for (int x = 0; x < v.width(); ++x) {
    EXPECT_GE(dx(v, x, 0) * dx(vz, x, 0), -1e-6) << "x = " << x;
  }
  EXPECT_GT(testing::max_diff(vz, v), 1e-3);  // still sharpened somewhere
}

TEST(Halo, IdentityWhenNoReversal) {
  const Image v = testing::test_pattern(32, 24, 5, 3);
  const Image vbar = add(scale(v, 1.5f), Image(32, 24, 3, -0.1f));  // same gradient direction
  const Image m = reversal_map(v, vbar);
  for (float value : m.samples()) ASSERT_LE(value, 0.0f);
  const auto [out, mask] = blend(v, vbar);
  EXPECT_EQ(out, vbar);
  for (float z : mask.z.samples()) EXPECT_EQ(z, 0.0f);
}

TEST(Halo, MaskInUnitIntervalAndShared) {
  const Image v = testing::test_pattern(40, 40, 6, 3);
  const Image vbar = testing::test_pattern(40, 40, 7, 3);
  const auto [out, mask] = blend(v, vbar);
  ASSERT_EQ(mask.z.channels(), 1);
  for (float z : mask.z.samples()) {
    EXPECT_GE(z, 0.0f);
    EXPECT_LE(z, 1.0f);
  }
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < 40; ++y) {
      for (int x = 0; x < 40; ++x) {
        const float z = mask.z.at(x, y);
        EXPECT_NEAR(out.at(x, y, c), z * v.at(x, y, c) + (1 - z) * vbar.at(x, y, c), 1e-6);
      }
    }
  }
}

TEST(Halo, ReversalMapSumsChannels) {
  Image v(8, 1, 3);
  Image vbar(8, 1, 3);
  for (int c = 0; c < 3; ++c) {
    for (int x = 0; x < 8; ++x) {
      v.at(x, 0, c) = 0.1f * x;
      vbar.at(x, 0, c) = -0.2f * x;
    }
  }
  // Per channel -(0.1 * -0.2) = 0.02.
  EXPECT_NEAR(reversal_map(v, vbar).at(4, 0), 0.06, 1e-6);
}

TEST(Halo, SmoothMaskOption) {
  const auto [v, vbar] = oversharpened_step();
  Image v2(64, 16), b2(64, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 64; ++x) {
      v2.at(x, y) = v.at(x, 0);
      b2.at(x, y) = vbar.at(x, 0);
    }
  }
  const auto sharp_mask = blend(v2, b2).second;
  const auto soft_mask = blend(v2, b2, {true}).second;
  double tv_sharp = 0.0, tv_soft = 0.0;
  for (int x = 1; x < 64; ++x) {
    tv_sharp += std::abs(sharp_mask.z.at(x, 8) - sharp_mask.z.at(x - 1, 8));
    tv_soft += std::abs(soft_mask.z.at(x, 8) - soft_mask.z.at(x - 1, 8));
  }
  EXPECT_LT(tv_soft, tv_sharp);
}

// On real scenes the blend alone leaves reversals where z varies; after the
// repair no pixel is reversed by more than the tolerance, for any filter.
class HaloRepair : public ::testing::TestWithParam<int> {};

TEST_P(HaloRepair, NoReversalLeft) {
  const int seed = GetParam();
  const Image sharp = dead_leaves({.width = 96, .height = 80, .channels = 3}, 50 + seed);
  const Image v = separable_gaussian(sharp, {1.5, 1.0, 0.0});
  const Image vbar = apply_poly_spatial(v, {2.5, 0.5, 0.3 * seed}, solve_p3(10.0 + 4.0 * seed, 1.0));
  const auto [unrepaired, m0] = blend(v, vbar, BlendOptions{.repair = false});
  const Image before = reversal_map(v, unrepaired);
  EXPECT_GT(*std::ranges::max_element(before.samples()), kRepairTolerance);
  EXPECT_EQ(m0.repaired, 0);

  for (bool smooth : {false, true}) {
    const auto [out, mask] = blend(v, vbar, BlendOptions{.smooth_mask = smooth});
    const Image after = reversal_map(v, out);
    EXPECT_LE(*std::ranges::max_element(after.samples()), kRepairTolerance * (1.0 + 1e-3));
    EXPECT_GT(mask.repaired, 0);
    for (float z : mask.z.samples()) ASSERT_TRUE(z >= 0.0f && z <= 1.0f);
  }
}

INSTANTIATE_TEST_SUITE_P(Scenes, HaloRepair, ::testing::Range(1, 5));

TEST(Halo, RepairOnlyTouchesReversedStencils) {
  Image v(40, 40, 1);
  for (int y = 0; y < 40; ++y)
    for (int x = 0; x < 40; ++x) v.at(x, y) = 0.01f * x;
  Image out = scale(v, 1.2f);
  out.at(20, 20) = 5.0f;  // spike reverses its row and column neighbors
  Image z(40, 40, 1);
  const int reset = repair_reversals(v, out, z);
  EXPECT_GT(reset, 0);
  EXPECT_EQ(out.at(20, 20), v.at(20, 20));
  EXPECT_EQ(out.at(5, 5), 1.2f * v.at(5, 5));
  EXPECT_EQ(z.at(5, 5), 0.0f);
}

TEST(Halo, SelfAndInvertedReversalMaps) {
  const Image v = testing::test_pattern(30, 30, 12, 3);
  const Image self = reversal_map(v, v);
  const Image inverted = reversal_map(v, add(scale(v, -1.0f), Image(30, 30, 3, 1.0f)));
  for (float m : self.samples()) ASSERT_LE(m, 0.0f);
  for (float m : inverted.samples()) ASSERT_GE(m, 0.0f);
}

TEST(Halo, FlatInputReversalRestoresInput) {
  const Image v(16, 16, 1, 0.4f);
  Image vbar = testing::test_pattern(16, 16, 3);
  const auto [out, mask] = blend(v, vbar, BlendOptions{.repair = false});
  // Zero input gradient: M = 0 there, so nothing to restore...
  EXPECT_EQ(out, vbar);
  // ...whereas a reversal over a vanishing gradient takes z = 1.
  Image ramp(16, 1, 1);
  for (int x = 0; x < 16; ++x) ramp.at(x, 0) = 0.5f + 1e-7f * x;
  Image down(16, 1, 1);
  for (int x = 0; x < 16; ++x) down.at(x, 0) = 0.5f - 0.1f * x;
  const auto [o2, m2] = blend(ramp, down, BlendOptions{.repair = false});
  for (int x = 1; x < 15; ++x) EXPECT_NEAR(m2.z.at(x, 0), 1.0f, 1e-5f);
}

TEST(Halo, OutputStaysBetweenInputs) {
  const auto [v, vbar] = oversharpened_step();
  const Image sharp = dead_leaves({.width = 64, .height = 64, .channels = 3}, 88);
  const Image v2 = separable_gaussian(sharp, {1.5, 1.0, 0.0});
  const Image vbar2 = apply_poly_spatial(v2, {2.0, 0.6, 0.8}, solve_p3(12.0, 1.0));
  for (const auto& [a, b] : {std::pair{v, vbar}, std::pair{v2, vbar2}}) {
    const Image out = blend(a, b).first;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const float x = out.samples()[i], lo = std::min(a.samples()[i], b.samples()[i]),
                  hi = std::max(a.samples()[i], b.samples()[i]);
      ASSERT_GE(x, lo - 1e-6f);
      ASSERT_LE(x, hi + 1e-6f);
      ASSERT_LE(std::abs(x - a.samples()[i]), std::abs(b.samples()[i] - a.samples()[i]) + 1e-6f);
    }
  }
}

TEST(Halo, ShapeMismatchThrows) { EXPECT_THROW(blend(Image(4, 4), Image(4, 5)), std::invalid_argument); }

}  // namespace
}  // namespace mildblur
