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

#include <utility>

#include "mildblur/image.hpp"

namespace mildblur {

inline constexpr double kHaloEpsilon = 1e-12;
/// Reversals with -grad v . grad out at or below this are left alone.
inline constexpr double kRepairTolerance = 1e-6;

/// Per-pixel weight of the input in the final blend; 0 keeps the deblurred
/// sample, 1 restores the input.
struct BlendMask {
  Image z;
  /// Pixels the repair step reset to the input.
  int repaired = 0;
};

struct BlendOptions {
  /// Smooth z with a sigma = 1 px Gaussian before blending.
  bool smooth_mask = false;
  /// Follow the blend with repair_reversals.
  bool repair = true;
  double repair_tolerance = kRepairTolerance;
};

/// M(x) = -grad v . grad vbar, summed over channels. Positive where the
/// deblurred image reverses the input gradient. Throws std::invalid_argument
/// on shape mismatch.
Image reversal_map(const Image& v, const Image& vbar);

/// z = M / max(|grad v|^2 + M, eps) where M > 0 and 0 elsewhere; returns
/// z v + (1 - z) vbar with one z shared by all channels.
std::pair<Image, BlendMask> blend(const Image& v, const Image& vbar, const BlendOptions& options = {});

/// The blend weight is exact only where z is locally constant; where it
/// varies, a blended pixel can still be reversed. Until no pixel reversed by
/// more than `tolerance` is left, reset every such pixel and its four
/// neighbors to v (z = 1 there). A pixel whose gradient stencil reads only v
/// has the gradient of v, so the loop terminates. Returns the pixels reset.
int repair_reversals(const Image& v, Image& out, Image& z, double tolerance = kRepairTolerance);

}  // namespace mildblur
