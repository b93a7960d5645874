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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mildblur/image.hpp"
#include "mildblur/pipeline.hpp"
#include "mildblur/synth.hpp"

namespace mildblur {

inline constexpr int kBenchIterations = 3;

struct BenchConfig {
  DeblurConfig deblur;
  /// Images to use from the sorted corpus; 0 means all.
  int n_images = 0;
  std::uint64_t seed = 1;
  double noise_sigma = kDefaultNoiseSigma;
  BlurRange range;
  /// When false every timing column is written as 0 so that the CSV is a
  /// pure function of the inputs.
  bool record_timings = true;
};

struct NamedImage {
  std::string id;
  Image image;
};

struct BenchRecord {
  std::string image_id;
  GaussianParams truth;
  BlurEstimate estimate;  // first iteration
  double psnr_blurry = 0.0;
  double ssim_blurry = 0.0;
  std::array<double, kBenchIterations> psnr_out{};
  std::array<double, kBenchIterations> ssim_out{};
  // First-iteration stage times and the wall time of that pass.
  double t_estimate_ms = 0.0;
  double t_deblur_ms = 0.0;
  double t_halo_ms = 0.0;
  double t_total_ms = 0.0;
};

struct BenchSummary {
  std::vector<BenchRecord> records;  // sorted by image_id
  BenchRecord mean;                  // image_id "mean"
};

/// For each image (in id order, blur seeded by its position): synthesize a
/// blurry copy, deblur with 1..3 iterations and score everything against
/// the sharp original. Throws std::invalid_argument on an empty corpus.
BenchSummary run_benchmark(std::vector<NamedImage> corpus, const BenchConfig& config);

/// run_benchmark over the PNG files of a directory, ids are file names.
BenchSummary run_benchmark_dir(const std::string& dir, const BenchConfig& config);

/// Header, one row per record and a final "mean" row.
void write_bench_csv(const BenchSummary& summary, std::ostream& os);

std::string bench_csv_header();

}  // namespace mildblur
