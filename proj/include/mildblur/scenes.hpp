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

#include <cstdint>
#include <vector>

#include "mildblur/image.hpp"

namespace mildblur {

/// Procedural occlusion scene: overlapping disks with power-law radii,
/// random, channel-correlated colors and a mild linear shading per disk, box-filtered from a
/// 3x3 supersampled render. Heavy-tailed edge statistics make it a stand-in
/// for natural photographs when no corpus is supplied.
struct DeadLeavesOptions {
  int width = 256;
  int height = 256;
  int channels = 3;
  double min_radius = 2.0;
  /// 0 picks a third of the shorter side.
  double max_radius = 0.0;
  /// Disk count per 1000 pixels.
  double density = 25.0;
};

Image dead_leaves(const DeadLeavesOptions& options, std::uint64_t seed);

/// count dead-leaves scenes with seeds first_seed, first_seed + 1, ...
std::vector<Image> procedural_corpus(int count, int size, std::uint64_t first_seed, int channels = 3);

/// Vertical step at column x0: lo to the left, hi from x0 on.
Image step_edge(int width, int height, int x0, float lo = 0.2f, float hi = 0.8f);

Image checkerboard(int width, int height, int cell, float lo = 0.0f, float hi = 1.0f);

}  // namespace mildblur
