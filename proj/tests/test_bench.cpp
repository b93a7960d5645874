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
#include <filesystem>
#include <sstream>

#include "mildblur/benchmark.hpp"
#include "mildblur/calibrate.hpp"
#include "mildblur/io.hpp"
#include "mildblur/metrics.hpp"
#include "mildblur/scenes.hpp"
#include "mildblur/synth.hpp"
#include "test_util.hpp"

namespace mildblur {
namespace {

// 10%-90% rise width of a monotone row profile, in pixels.
double rise_width(const Image& img, int y) {
  const auto row = img.row(y, 0);
  const float lo = row.front(), hi = row.back();
  auto cross = [&](float level) {
    for (std::size_t x = 1; x < row.size(); ++x) {
      if (row[x] >= level) {
        return static_cast<double>(x - 1) + (level - row[x - 1]) / (row[x] - row[x - 1]);
      }
    }
    return static_cast<double>(row.size());
  };
  return cross(lo + 0.9f * (hi - lo)) - cross(lo + 0.1f * (hi - lo));
}

TEST(Synth, MinimalBlurKeepsImage) {
  const Image sharp = dead_leaves({.width = 96, .height = 96, .channels = 3}, 100);
  const BlurSample s{{0.3, 1.0, 0.0}, 0.0, 5};
  EXPECT_GE(psnr(synthesize_blurry(sharp, s), sharp), 35.0);
}

TEST(Synth, SeedDeterminesOutput) {
  const Image sharp = dead_leaves({.width = 64, .height = 64, .channels = 3}, 101);
  const BlurSample a{{1.5, 0.5, 0.7}, 0.01, 42};
  BlurSample b = a;
  b.seed = 43;
  const Image x1 = synthesize_blurry(sharp, a);
  const Image x2 = synthesize_blurry(sharp, a);
  EXPECT_TRUE(std::ranges::equal(x1.samples(), x2.samples()));
  EXPECT_FALSE(std::ranges::equal(x1.samples(), synthesize_blurry(sharp, b).samples()));
}

TEST(Synth, MajorAxisSpreadsEdge) {
  // Vertical edge: a horizontal major axis widens it, a vertical one barely does.
  const Image edge = step_edge(96, 40, 48);
  const BlurSample wide{{4.0, 0.15, 0.0}, 0.0, 1};
  const BlurSample narrow{{4.0, 0.15, kPi / 2.0}, 0.0, 1};
  const double w_wide = rise_width(synthesize_blurry(edge, wide), 20);
  const double w_narrow = rise_width(synthesize_blurry(edge, narrow), 20);
  // 10-90 width of a Gaussian edge is 2.563 sigma.
  EXPECT_NEAR(w_wide, 2.563 * 4.0, 0.4);
  EXPECT_NEAR(w_narrow, 2.563 * 0.6, 0.4);
}

TEST(Synth, DrawsStayInRange) {
  const BlurRange range;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const BlurSample d = draw_blur_sample(s);
    EXPECT_GE(d.params.sigma0, range.sigma0_min);
    EXPECT_LE(d.params.sigma0, range.sigma0_max);
    EXPECT_GE(d.params.rho, range.rho_min);
    EXPECT_LE(d.params.rho, range.rho_max);
    EXPECT_GE(d.params.theta, 0.0);
    EXPECT_LT(d.params.theta, kPi);
  }
  EXPECT_EQ(draw_blur_sample(7).seed, draw_blur_sample(7).seed);
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
}

TEST(Synth, RejectsInvalidSample) {
  const Image img(32, 32, 1, 0.5f);
  EXPECT_THROW(synthesize_blurry(img, BlurSample{{1.0, 0.5, 0.0}, -0.1, 0}), std::invalid_argument);
  EXPECT_THROW(synthesize_blurry(img, BlurSample{{-1.0, 0.5, 0.0}, 0.0, 0}), std::invalid_argument);
}

std::vector<CalibrationSample> model_samples(double c, double sb, int n) {
  std::vector<CalibrationSample> out;
  for (int i = 0; i < n; ++i) {
    const BlurSample d = draw_blur_sample(static_cast<std::uint64_t>(i));
    const double s0 = d.params.sigma0;
    const double s1 = d.params.sigma1();
    CalibrationSample s;
    s.truth = d.params;
    s.measured.theta = d.params.theta;
    s.measured.f_theta = c / std::sqrt(s0 * s0 + sb * sb);
    s.measured.f_theta_perp = c / std::sqrt(s1 * s1 + sb * sb);
    out.push_back(s);
  }
  return out;
}

TEST(Calibration, RecoversModelParameters) {
  const CalibrationResult r = fit_calibration(model_samples(0.4, 0.5, 300));
  EXPECT_NEAR(r.params.c_slope, 0.4, 0.02);
  EXPECT_NEAR(r.params.sigma_b, 0.5, 0.025);
  EXPECT_LT(r.mae, 1e-3);
  EXPECT_NEAR(calibration_mae(r.samples, r.params), r.mae, 1e-12);
}

TEST(Calibration, FittedMapIsMonotone) {
  const CalibrationResult r = fit_calibration(model_samples(0.4, 0.5, 200));
  double prev = 1e9;
  for (double f = 0.05; f < 1.5; f += 0.01) {
    const double s = feature_to_sigma(f, r.params);
    EXPECT_LE(s, prev + 1e-12);
    prev = s;
  }
}

TEST(Calibration, Preconditions) {
  const auto few = procedural_corpus(4, 64, 200);
  EXPECT_THROW(calibrate(few, 200, 1), std::invalid_argument);
  const auto enough = procedural_corpus(5, 64, 200);
  EXPECT_THROW(calibrate(enough, 99, 1), std::invalid_argument);
}

TEST(Calibration, SmallRunFitsWell) {
  const auto images = procedural_corpus(5, 128, 300);
  const CalibrationResult r = calibrate(images, 150, 77);
  EXPECT_EQ(r.k, 150);
  EXPECT_EQ(static_cast<int>(r.samples.size()) + r.skipped, 150);
  EXPECT_LE(r.mae, 0.5);
  EXPECT_GT(r.params.c_slope, 0.0);
  const CalibrationResult again = calibrate(images, 150, 77);
  EXPECT_EQ(r.params.c_slope, again.params.c_slope);
  EXPECT_EQ(r.params.sigma_b, again.params.sigma_b);
}

std::vector<NamedImage> named_corpus(int n, int size, std::uint64_t seed) {
  std::vector<NamedImage> out;
  const auto images = procedural_corpus(n, size, seed);
  for (int i = 0; i < n; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "scene_%03d", i);
    out.push_back({id, images[i]});
  }
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

TEST(Bench, CsvIsDeterministicWithoutTimings) {
  BenchConfig cfg;
  cfg.record_timings = false;
  const auto corpus = named_corpus(10, 96, 400);
  std::ostringstream a, b;
  write_bench_csv(run_benchmark(corpus, cfg), a);
  write_bench_csv(run_benchmark(corpus, cfg), b);
  EXPECT_EQ(a.str(), b.str());

  const auto lines = lines_of(a.str());
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines.front(), bench_csv_header());
  EXPECT_EQ(lines.back().rfind("mean,", 0), 0u);
  EXPECT_EQ(lines[1].rfind("scene_000,", 0), 0u);
}

TEST(Bench, SummaryIsConsistent) {
  BenchConfig cfg;
  const BenchSummary s = run_benchmark(named_corpus(6, 96, 500), cfg);
  ASSERT_EQ(s.records.size(), 6u);
  double mean_blurry = 0.0;
  for (const auto& r : s.records) {
    mean_blurry += r.psnr_blurry / 6.0;
    EXPECT_GE(r.t_total_ms, r.t_estimate_ms + r.t_deblur_ms + r.t_halo_ms - 1e-9);
    EXPECT_LE(r.t_total_ms, 1.1 * (r.t_estimate_ms + r.t_deblur_ms + r.t_halo_ms) + 0.5);
  }
  EXPECT_NEAR(s.mean.psnr_blurry, mean_blurry, 1e-9);
  EXPECT_GT(s.mean.psnr_out[0], s.mean.psnr_blurry);
  EXPECT_EQ(s.mean.image_id, "mean");
}

TEST(Bench, OrderAndTruncation) {
  auto corpus = named_corpus(4, 64, 600);
  std::reverse(corpus.begin(), corpus.end());
  BenchConfig cfg;
  cfg.n_images = 2;
  const BenchSummary s = run_benchmark(corpus, cfg);
  ASSERT_EQ(s.records.size(), 2u);
  EXPECT_EQ(s.records[0].image_id, "scene_000");
  EXPECT_EQ(s.records[1].image_id, "scene_001");
  EXPECT_THROW(run_benchmark({}, cfg), std::invalid_argument);
}

TEST(Bench, DirectoryMatchesInMemory) {
  const auto dir = std::filesystem::temp_directory_path() / "mildblur_bench_dir";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto corpus = named_corpus(3, 64, 700);
  for (auto& item : corpus) {
    const auto path = dir / (item.id + ".png");
    write_image(item.image, path, 16);
    item.image = read_image(path);
    item.id += ".png";
  }
  BenchConfig cfg;
  cfg.record_timings = false;
  std::ostringstream a, b;
  write_bench_csv(run_benchmark(corpus, cfg), a);
  write_bench_csv(run_benchmark_dir(dir.string(), cfg), b);
  EXPECT_EQ(a.str(), b.str());
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace mildblur
