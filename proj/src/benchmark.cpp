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

#include "mildblur/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <stdexcept>

#include "mildblur/io.hpp"
#include "mildblur/metrics.hpp"

namespace mildblur {
namespace {

double degrees(double rad) { return rad * 180.0 / kPi; }

BenchRecord bench_one(const NamedImage& item, std::uint64_t seed, const BenchConfig& config) {
  const BlurSample sample = draw_blur_sample(seed, config.noise_sigma, config.range);
  const Image blurry = synthesize_blurry(item.image, sample);

  BenchRecord rec;
  rec.image_id = item.id;
  rec.truth = sample.params;
  rec.psnr_blurry = psnr(blurry, item.image);
  rec.ssim_blurry = ssim(blurry, item.image);

  DeblurConfig cfg = config.deblur;
  if (cfg.prefilter == PrefilterChoice::none) {
    Image current = blurry;
    for (int it = 0; it < kBenchIterations; ++it) {
      const auto t0 = std::chrono::steady_clock::now();
      PassResult pass = deblur_pass(current, cfg);
      const double wall = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (it == 0) {
        rec.estimate = pass.estimate;
        rec.t_estimate_ms = pass.report.t_estimate_ms;
        rec.t_deblur_ms = pass.report.t_deblur_ms;
        rec.t_halo_ms = pass.report.t_halo_ms;
        rec.t_total_ms = wall;
      }
      current = std::move(pass.image);
      const Image out = clamp(current);
      rec.psnr_out[it] = psnr(out, item.image);
      rec.ssim_out[it] = ssim(out, item.image);
    }
  } else {
    for (int it = 0; it < kBenchIterations; ++it) {
      cfg.iterations = it + 1;
      const auto [out, report] = run_pipeline(blurry, cfg);
      if (it == 0) {
        const IterationReport& first = report.iterations.front();
        rec.estimate = first.estimate;
        rec.t_estimate_ms = first.t_estimate_ms;
        rec.t_deblur_ms = first.t_deblur_ms;
        rec.t_halo_ms = first.t_halo_ms;
        rec.t_total_ms = report.t_total_ms;
      }
      rec.psnr_out[it] = psnr(out, item.image);
      rec.ssim_out[it] = ssim(out, item.image);
    }
  }
  if (!config.record_timings) rec.t_estimate_ms = rec.t_deblur_ms = rec.t_halo_ms = rec.t_total_ms = 0.0;
  return rec;
}

BenchRecord mean_record(const std::vector<BenchRecord>& records) {
  BenchRecord m;
  m.image_id = "mean";
  m.truth = {0.0, 0.0, 0.0};
  m.estimate.params = {0.0, 0.0, 0.0};
  const double n = static_cast<double>(records.size());
  for (const auto& r : records) {
    m.truth.sigma0 += r.truth.sigma0 / n;
    m.truth.rho += r.truth.rho / n;
    m.truth.theta += r.truth.theta / n;
    m.estimate.params.sigma0 += r.estimate.params.sigma0 / n;
    m.estimate.params.rho += r.estimate.params.rho / n;
    m.estimate.params.theta += r.estimate.params.theta / n;
    m.psnr_blurry += r.psnr_blurry / n;
    m.ssim_blurry += r.ssim_blurry / n;
    for (int i = 0; i < kBenchIterations; ++i) {
      m.psnr_out[i] += r.psnr_out[i] / n;
      m.ssim_out[i] += r.ssim_out[i] / n;
    }
    m.t_estimate_ms += r.t_estimate_ms / n;
    m.t_deblur_ms += r.t_deblur_ms / n;
    m.t_halo_ms += r.t_halo_ms / n;
    m.t_total_ms += r.t_total_ms / n;
  }
  return m;
}

}  // namespace

BenchSummary run_benchmark(std::vector<NamedImage> corpus, const BenchConfig& config) {
  if (corpus.empty()) throw std::invalid_argument("run_benchmark: empty corpus");
  if (config.n_images < 0) throw std::invalid_argument("run_benchmark: negative image count");
  config.deblur.validate();
  std::ranges::stable_sort(corpus, {}, &NamedImage::id);
  if (config.n_images > 0 && config.n_images < static_cast<int>(corpus.size())) corpus.resize(config.n_images);

  BenchSummary summary;
  summary.records.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    summary.records.push_back(bench_one(corpus[i], mix_seed(config.seed, i), config));
  }
  std::ranges::stable_sort(summary.records, {}, &BenchRecord::image_id);
  summary.mean = mean_record(summary.records);
  return summary;
}

BenchSummary run_benchmark_dir(const std::string& dir, const BenchConfig& config) {
  const auto files = list_png_files(dir);
  if (files.empty()) throw std::invalid_argument("run_benchmark: no PNG files in " + dir);
  std::vector<NamedImage> corpus;
  const std::size_t limit = config.n_images > 0 ? static_cast<std::size_t>(config.n_images) : files.size();
  for (const auto& f : files) {
    if (corpus.size() >= limit) break;
    corpus.push_back({std::filesystem::path(f).filename().string(), read_image(f)});
  }
  return run_benchmark(std::move(corpus), config);
}

std::string bench_csv_header() {
  return "image_id,sigma0_true,rho_true,theta_true_deg,sigma0_est,rho_est,theta_est_deg,psnr_blurry,ssim_blurry,"
         "psnr_out_1it,psnr_out_2it,psnr_out_3it,ssim_out_1it,ssim_out_2it,ssim_out_3it,"
         "t_estimate_ms,t_deblur_ms,t_halo_ms";
}

void write_bench_csv(const BenchSummary& summary, std::ostream& os) {
  os << bench_csv_header() << '\n';
  char buf[512];
  auto row = [&](const BenchRecord& r) {
    std::snprintf(buf, sizeof buf,
                  "%s,%.6f,%.6f,%.4f,%.6f,%.6f,%.4f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.3f,%.3f,%.3f\n",
                  r.image_id.c_str(), r.truth.sigma0, r.truth.rho, degrees(r.truth.theta), r.estimate.params.sigma0,
                  r.estimate.params.rho, degrees(r.estimate.params.theta), r.psnr_blurry, r.ssim_blurry,
                  r.psnr_out[0], r.psnr_out[1], r.psnr_out[2], r.ssim_out[0], r.ssim_out[1], r.ssim_out[2],
                  r.t_estimate_ms, r.t_deblur_ms, r.t_halo_ms);
    os << buf;
  };
  for (const auto& r : summary.records) row(r);
  row(summary.mean);
}

}  // namespace mildblur
