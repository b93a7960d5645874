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

#include "mildblur/io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cctype>
#include <csetjmp>
#include <cstdio>
#include <memory>

namespace mildblur {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void on_png_warning(png_structp, png_const_charp) {}

// libpng reports errors through longjmp. Every object with a destructor is
// constructed before setjmp so the jump never skips one.
struct DecodeState {
  png_structp png = nullptr;
  png_infop info = nullptr;
  std::vector<unsigned char> pixels;
  std::vector<png_bytep> rows;
  char message[256] = {0};
};

void on_png_error(png_structp png, png_const_charp msg) {
  auto* state = static_cast<DecodeState*>(png_get_error_ptr(png));
  if (state != nullptr) std::snprintf(state->message, sizeof(state->message), "%s", msg);
  png_longjmp(png, 1);
}

}  // namespace

Image read_image(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.c_str(), "rb"));
  if (!file) throw IoError("cannot open " + path.string());

  unsigned char signature[8];
  if (std::fread(signature, 1, 8, file.get()) != 8 || png_sig_cmp(signature, 0, 8) != 0) {
    throw IoError(path.string() + ": not a PNG file");
  }

  DecodeState state;
  state.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &state, on_png_error, on_png_warning);
  if (state.png == nullptr) throw IoError("png_create_read_struct failed");
  state.info = png_create_info_struct(state.png);
  if (state.info == nullptr) {
    png_destroy_read_struct(&state.png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }

  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int bit_depth = 0;
  int channels = 0;
  std::size_t row_bytes = 0;

  if (setjmp(png_jmpbuf(state.png))) {
    png_destroy_read_struct(&state.png, &state.info, nullptr);
    throw IoError(path.string() + ": decode error: " + state.message);
  }

  png_init_io(state.png, file.get());
  png_set_sig_bytes(state.png, 8);
  png_read_info(state.png, state.info);

  const int color_type = png_get_color_type(state.png, state.info);
  bit_depth = png_get_bit_depth(state.png, state.info);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(state.png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(state.png);
  if (png_get_valid(state.png, state.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(state.png);
  if (color_type & PNG_COLOR_MASK_ALPHA || png_get_valid(state.png, state.info, PNG_INFO_tRNS)) {
    png_set_strip_alpha(state.png);
  }
  png_read_update_info(state.png, state.info);

  width = png_get_image_width(state.png, state.info);
  height = png_get_image_height(state.png, state.info);
  bit_depth = png_get_bit_depth(state.png, state.info);
  channels = png_get_channels(state.png, state.info);
  row_bytes = png_get_rowbytes(state.png, state.info);

  state.pixels.resize(row_bytes * height);
  state.rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) state.rows[y] = state.pixels.data() + y * row_bytes;
  png_read_image(state.png, state.rows.data());
  png_read_end(state.png, nullptr);
  png_destroy_read_struct(&state.png, &state.info, nullptr);

  if (channels != 1 && channels != 3) {
    throw IoError(path.string() + ": unsupported channel layout");
  }
  Image image(static_cast<int>(width), static_cast<int>(height), channels);
  const double scale = bit_depth == 16 ? 1.0 / 65535.0 : 1.0 / 255.0;
  for (png_uint_32 y = 0; y < height; ++y) {
    const unsigned char* src = state.rows[y];
    for (png_uint_32 x = 0; x < width; ++x) {
      for (int c = 0; c < channels; ++c) {
        const std::size_t k = static_cast<std::size_t>(x) * channels + c;
        const unsigned value = bit_depth == 16 ? (unsigned(src[2 * k]) << 8) | src[2 * k + 1] : src[k];
        image.at(static_cast<int>(x), static_cast<int>(y), c) = static_cast<float>(value * scale);
      }
    }
  }
  return image;
}

void write_image(const Image& image, const std::filesystem::path& path, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) throw std::invalid_argument("bit depth must be 8 or 16");
  if (image.empty()) throw std::invalid_argument("write_image: empty image");

  const int channels = image.channels();
  const int bytes_per_sample = bit_depth / 8;
  const std::size_t row_bytes = static_cast<std::size_t>(image.width()) * channels * bytes_per_sample;
  const double max_value = bit_depth == 16 ? 65535.0 : 255.0;

  DecodeState state;
  state.pixels.resize(row_bytes * image.height());
  state.rows.resize(image.height());
  for (int y = 0; y < image.height(); ++y) {
    unsigned char* dst = state.pixels.data() + y * row_bytes;
    state.rows[y] = dst;
    for (int x = 0; x < image.width(); ++x) {
      for (int c = 0; c < channels; ++c) {
        const double v = std::clamp(static_cast<double>(image.at(x, y, c)), 0.0, 1.0);
        const auto q = static_cast<unsigned>(std::lround(v * max_value));
        const std::size_t k = static_cast<std::size_t>(x) * channels + c;
        if (bit_depth == 16) {
          dst[2 * k] = static_cast<unsigned char>(q >> 8);
          dst[2 * k + 1] = static_cast<unsigned char>(q & 0xFF);
        } else {
          dst[k] = static_cast<unsigned char>(q);
        }
      }
    }
  }

  FilePtr file(std::fopen(path.c_str(), "wb"));
  if (!file) throw IoError("cannot open " + path.string() + " for writing");

  state.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &state, on_png_error, on_png_warning);
  if (state.png == nullptr) throw IoError("png_create_write_struct failed");
  state.info = png_create_info_struct(state.png);
  if (state.info == nullptr) {
    png_destroy_write_struct(&state.png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(state.png))) {
    png_destroy_write_struct(&state.png, &state.info);
    throw IoError(path.string() + ": encode error: " + state.message);
  }
  png_init_io(state.png, file.get());
  png_set_IHDR(state.png, state.info, image.width(), image.height(), bit_depth,
               channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(state.png, state.info);
  png_write_image(state.png, state.rows.data());
  png_write_end(state.png, nullptr);
  png_destroy_write_struct(&state.png, &state.info);
}

std::vector<std::filesystem::path> list_png_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw IoError(dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::ranges::transform(ext, ext.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (ext == ".png") files.push_back(entry.path());
  }
  std::ranges::sort(files);
  return files;
}

}  // namespace mildblur
