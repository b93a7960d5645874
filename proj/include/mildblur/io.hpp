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

#include <filesystem>
#include <string>
#include <vector>

#include "mildblur/image.hpp"

namespace mildblur {

/// Decode an 8- or 16-bit PNG. Gray and gray+alpha give 1 channel, everything
/// else 3 channels; alpha is dropped and palettes are expanded. Samples are
/// scaled to [0, 1]. Throws IoError on unreadable or malformed files.
Image read_image(const std::filesystem::path& path);

/// Encode as PNG, clamping to [0, 1] and quantizing with round-to-nearest.
void write_image(const Image& image, const std::filesystem::path& path, int bit_depth = 8);

/// Sorted list of *.png files directly inside `dir`.
std::vector<std::filesystem::path> list_png_files(const std::filesystem::path& dir);

}  // namespace mildblur
