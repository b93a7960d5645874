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

/// 10 log10(1 / MSE) with peak 1.0; +infinity when the images are identical.
double psnr(const Image& a, const Image& b);

inline constexpr int kSsimRadius = 5;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

/// Mean SSIM with an 11x11 Gaussian window (sigma 1.5), population
/// statistics and dynamic range 1. The map is averaged over window
/// positions that lie fully inside the image, then over channels.
/// Requires at least 11x11 pixels.
double ssim(const Image& a, const Image& b);

}  // namespace mildblur
