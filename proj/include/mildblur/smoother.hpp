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

#include <functional>

#include "mildblur/image.hpp"

namespace mildblur {

/// Any low-pass that keeps the image size, typically edge-preserving.
using Smoother = std::function<Image(const Image&)>;

struct EdgeSmootherParams {
  /// Spatial decay length of the recursive filter, in pixels.
  double spatial_sigma = 3.0;
  /// Intensity difference at which smoothing across a step is suppressed.
  double range_sigma = 0.08;
};

/// Edge-stopping exponential smoother: one causal and one anti-causal
/// recursive pass along rows, then the same along columns. The feedback
/// weight between neighbors decays with their intensity difference (summed
/// over channels), so flat regions are smoothed and steps are kept.
Image edge_stopping_smooth(const Image& image, const EdgeSmootherParams& params = {});

Smoother make_edge_smoother(const EdgeSmootherParams& params = {});

inline Smoother identity_smoother() {
  return [](const Image& v) { return v; };
}

}  // namespace mildblur
