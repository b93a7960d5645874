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

// mildblur: blind removal of mild Gaussian blur from the command line.
//
//   mildblur estimate  [--m N] in.png
//   mildblur deblur    [--alpha A --b B --iterations N ...] in.png out.png
//   mildblur calibrate [--k K --seed S] (dir | --procedural N)
//   mildblur bench     [--n N --seed S] (dir | --procedural N) out.csv
//   mildblur synth     --sigma0 S --rho R --theta DEG --seed S sharp.png out.png
//   mildblur curves    [--alpha A --b B --degree D] out.csv
//
// Exit codes: 0 success, 1 usage error, 2 degenerate input, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "mildblur/benchmark.hpp"
#include "mildblur/calibrate.hpp"
#include "mildblur/io.hpp"
#include "mildblur/pipeline.hpp"
#include "mildblur/polyfilter.hpp"
#include "mildblur/scenes.hpp"
#include "mildblur/serialize.hpp"
#include "mildblur/synth.hpp"

namespace fs = std::filesystem;
using namespace mildblur;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitIo = 3;

// Output files must land in an existing directory.
std::string check_output_path(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) return "output directory does not exist: " + parent.string();
  return {};
}

struct DeblurFlags {
  double alpha = kDefaultAlpha;
  double b = kDefaultB;
  int iterations = 1;
  bool no_halo = false;
  bool smooth_mask = false;
  std::string prefilter = "none";
  std::string engine = "auto";
  int angles = kDefaultAngles;
  std::string calib;

  void add_to(CLI::App* app, bool with_iterations) {
    app->add_option("--alpha", alpha, "Mid-frequency gain alpha")->capture_default_str();
    app->add_option("--b", b, "Gain at fully attenuated frequencies, p(0)")->capture_default_str();
    if (with_iterations) {
      app->add_option("--iterations", iterations, "Deblurring passes")->check(CLI::Range(1, 100))->capture_default_str();
    }
    app->add_flag("--no-halo", no_halo, "Disable gradient-reversal blending");
    app->add_flag("--smooth-mask", smooth_mask, "Smooth the blend mask with a 1 px Gaussian");
    app->add_option("--prefilter", prefilter, "none | edge (deblur an edge-preserving base, add the residual)")
        ->check(CLI::IsMember({"none", "edge"}))
        ->capture_default_str();
    app->add_option("--engine", engine, "auto | spatial | fourier")
        ->check(CLI::IsMember({"auto", "spatial", "fourier"}))
        ->capture_default_str();
    app->add_option("--m", angles, "Directions sampled by the estimator")->check(CLI::Range(4, 360))->capture_default_str();
    app->add_option("--calib", calib, "Calibration record (JSON with c_slope, sigma_b)")->check(CLI::ExistingFile);
  }

  DeblurConfig config() const {
    DeblurConfig cfg;
    cfg.alpha = alpha;
    cfg.b = b;
    cfg.iterations = iterations;
    cfg.halo_removal = !no_halo;
    cfg.smooth_mask = smooth_mask;
    cfg.prefilter = prefilter == "edge" ? PrefilterChoice::edge_smoother : PrefilterChoice::none;
    cfg.engine = parse_engine(engine);
    cfg.estimator.angles = angles;
    if (!calib.empty()) cfg.calibration = read_calibration(calib);
    cfg.validate();
    return cfg;
  }
};

struct CorpusFlags {
  std::string dir;
  int procedural = 0;
  int size = 256;
  std::uint64_t first_seed = 0;

  void add_to(CLI::App* app, std::uint64_t default_seed) {
    first_seed = default_seed;
    app->add_option("--procedural", procedural, "Use N generated dead-leaves scenes instead of a directory")
        ->check(CLI::Range(1, 100000));
    app->add_option("--size", size, "Side of generated scenes")->check(CLI::Range(48, 8192))->capture_default_str();
    app->add_option("--scene-seed", first_seed, "Seed of the first generated scene")->capture_default_str();
  }

  std::string validate() const {
    if (procedural > 0 && !dir.empty()) return "give either a directory or --procedural, not both";
    if (procedural == 0 && dir.empty()) return "a sharp image directory or --procedural N is required";
    if (!dir.empty() && !fs::is_directory(dir)) return "not a directory: " + dir;
    return {};
  }

  std::vector<NamedImage> load(int limit) const {
    std::vector<NamedImage> out;
    if (procedural > 0) {
      const int n = limit > 0 ? std::min(limit, procedural) : procedural;
      auto images = procedural_corpus(n, size, first_seed);
      for (int i = 0; i < n; ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "scene_%05d", i);
        out.push_back({id, std::move(images[i])});
      }
      return out;
    }
    for (const auto& f : list_png_files(dir)) {
      if (limit > 0 && static_cast<int>(out.size()) >= limit) break;
      out.push_back({f.filename().string(), read_image(f)});
    }
    return out;
  }
};

int cmd_estimate(const std::string& input, const DeblurFlags& flags, bool json) {
  const Image image = read_image(input);
  const DeblurConfig cfg = flags.config();
  const BlurEstimate e = estimate_blur(image, cfg.calibration, cfg.estimator);
  if (json) {
    std::cout << to_json(e).dump() << '\n';
  } else {
    std::cout << estimate_line(e) << '\n';
  }
  return kExitOk;
}

int cmd_deblur(const std::string& input, const std::string& output, const DeblurFlags& flags,
               const std::string& report_path, const std::string& mask_path) {
  const DeblurConfig cfg = flags.config();
  const Image image = read_image(input);
  const auto [out, report] = run_pipeline(image, cfg);
  write_image(out, output);
  if (!report_path.empty()) write_json(to_json(report), report_path);
  if (!mask_path.empty()) {
    write_image(report.last_mask.empty() ? Image(out.width(), out.height(), 1) : report.last_mask, mask_path, 8);
  }
  return kExitOk;
}

int cmd_calibrate(const CorpusFlags& corpus, int k, std::uint64_t seed, double noise, const std::string& out_path,
                  const std::string& scatter_path) {
  std::vector<Image> sharp;
  for (auto& item : corpus.load(0)) sharp.push_back(std::move(item.image));
  CalibrationOptions options;
  options.noise_sigma = noise;
  const CalibrationResult r = calibrate(sharp, k, seed, options);
  std::printf("c_slope=%.6f sigma_b=%.6f mae=%.6f K=%d seed=%llu\n", r.params.c_slope, r.params.sigma_b, r.mae, r.k,
              static_cast<unsigned long long>(r.seed));
  if (!out_path.empty()) {
    auto record = calibration_record(r);
    record["noise_sigma"] = noise;
    record["corpus"] = corpus.procedural > 0
                           ? nlohmann::json{{"kind", "dead_leaves"},
                                            {"count", corpus.procedural},
                                            {"size", corpus.size},
                                            {"first_seed", corpus.first_seed}}
                           : nlohmann::json{{"kind", "directory"}, {"images", sharp.size()}};
    write_json(record, out_path);
  }
  if (!scatter_path.empty()) {
    std::ofstream os(scatter_path);
    if (!os) throw IoError("cannot write " + scatter_path);
    os << "f_theta,f_theta_perp,sigma0_true,sigma1_true,sigma0_fit\n";
    char buf[160];
    for (const auto& s : r.samples) {
      std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f\n", s.measured.f_theta, s.measured.f_theta_perp,
                    s.truth.sigma0, s.truth.sigma1(), feature_to_sigma(s.measured.f_theta, r.params));
      os << buf;
    }
  }
  return kExitOk;
}

int cmd_bench(const CorpusFlags& corpus, const std::string& out_csv, const BenchConfig& cfg) {
  BenchSummary summary = run_benchmark(corpus.load(cfg.n_images), cfg);
  std::ofstream os(out_csv);
  if (!os) throw IoError("cannot write " + out_csv);
  write_bench_csv(summary, os);
  const BenchRecord& m = summary.mean;
  std::printf("images=%zu psnr_blurry=%.3f psnr_1it=%.3f psnr_2it=%.3f psnr_3it=%.3f ssim_blurry=%.4f ssim_1it=%.4f\n",
              summary.records.size(), m.psnr_blurry, m.psnr_out[0], m.psnr_out[1], m.psnr_out[2], m.ssim_blurry,
              m.ssim_out[0]);
  return kExitOk;
}

int cmd_synth(const std::string& input, const std::string& output, std::string truth_path, const BlurSample& sample) {
  const Image sharp = read_image(input);
  const Image blurry = synthesize_blurry(sharp, sample);
  write_image(blurry, output);
  if (truth_path.empty()) truth_path = fs::path(output).replace_extension(".json").string();
  write_json(to_json(sample), truth_path);
  return kExitOk;
}

int cmd_curves(const std::string& output, const PolyParams& params) {
  const PolyCoefficients p = params.degree == 3 ? solve_p3(params.alpha, params.b) : solve_general(params);
  const std::string csv = response_curve_csv(p);
  if (output.empty() || output == "-") {
    std::cout << csv;
    return kExitOk;
  }
  std::ofstream os(output);
  if (!os) throw IoError("cannot write " + output);
  os << csv;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blind removal of mild Gaussian blur with polynomial filters"};
  app.require_subcommand(1);

  // estimate
  auto* est = app.add_subcommand("estimate", "Print the estimated blur of an image");
  std::string est_input;
  bool est_json = false;
  DeblurFlags est_flags;
  est->add_option("input", est_input, "Input PNG")->required()->check(CLI::ExistingFile);
  est->add_option("--m", est_flags.angles, "Directions sampled by the estimator")
      ->check(CLI::Range(4, 360))
      ->capture_default_str();
  est->add_option("--calib", est_flags.calib, "Calibration record (JSON)")->check(CLI::ExistingFile);
  est->add_flag("--json", est_json, "Print a JSON object instead of key=value pairs");

  // deblur
  auto* deb = app.add_subcommand("deblur", "Estimate the blur and remove it");
  std::string deb_input, deb_output, deb_report, deb_mask;
  DeblurFlags deb_flags;
  deb->add_option("input", deb_input, "Input PNG")->required()->check(CLI::ExistingFile);
  deb->add_option("output", deb_output, "Output PNG")->required();
  deb_flags.add_to(deb, true);
  deb->add_option("--report", deb_report, "Write a JSON run report");
  deb->add_option("--mask-dump", deb_mask, "Write the last blend mask as an 8-bit PNG");

  // calibrate
  auto* cal = app.add_subcommand("calibrate", "Fit c_slope and sigma_b on simulated blurs of sharp images");
  CorpusFlags cal_corpus;
  int cal_k = 1000;
  std::uint64_t cal_seed = 9000;
  double cal_noise = kDefaultNoiseSigma;
  std::string cal_out, cal_scatter;
  cal->add_option("dir", cal_corpus.dir, "Directory of sharp PNGs");
  cal_corpus.add_to(cal, 9000);
  cal->add_option("--k", cal_k, "Simulated images")->check(CLI::Range(1, 10000000))->capture_default_str();
  cal->add_option("--seed", cal_seed, "Blur sampling seed")->capture_default_str();
  cal->add_option("--noise", cal_noise, "Noise standard deviation")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  cal->add_option("--out", cal_out, "Write the calibration record (JSON)");
  cal->add_option("--scatter", cal_scatter, "Write the (f_theta, sigma0) samples as CSV");

  // bench
  auto* ben = app.add_subcommand("bench", "Synthetic blur benchmark, one CSV row per image");
  CorpusFlags ben_corpus;
  BenchConfig ben_cfg;
  DeblurFlags ben_flags;
  bool ben_no_timings = false;
  std::string ben_out;
  std::vector<std::string> ben_pos;
  ben->add_option("paths", ben_pos, "[dir] out.csv")->required()->expected(1, 2);
  ben_corpus.add_to(ben, 1);
  ben->add_option("--n", ben_cfg.n_images, "Images to use (0 = all)")->check(CLI::NonNegativeNumber)->capture_default_str();
  ben->add_option("--seed", ben_cfg.seed, "Blur sampling seed")->capture_default_str();
  ben->add_option("--noise", ben_cfg.noise_sigma, "Noise standard deviation")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  ben->add_flag("--no-timings", ben_no_timings, "Write 0 in the timing columns");
  ben_flags.add_to(ben, false);

  // synth
  auto* syn = app.add_subcommand("synth", "Blur a sharp image with a known Gaussian and noise");
  std::string syn_input, syn_output, syn_truth;
  BlurSample syn_sample;
  double syn_theta_deg = 0.0;
  syn->add_option("input", syn_input, "Sharp PNG")->required()->check(CLI::ExistingFile);
  syn->add_option("output", syn_output, "Blurry PNG")->required();
  syn->add_option("--sigma0", syn_sample.params.sigma0, "Major-axis standard deviation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  syn->add_option("--rho", syn_sample.params.rho, "sigma1 / sigma0")->check(CLI::Range(1e-6, 1.0))->capture_default_str();
  syn->add_option("--theta", syn_theta_deg, "Major-axis angle, degrees counter-clockwise")->capture_default_str();
  syn->add_option("--noise", syn_sample.noise_sigma, "Noise standard deviation")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  syn->add_option("--seed", syn_sample.seed, "Noise seed")->capture_default_str();
  syn->add_option("--truth", syn_truth, "Ground-truth record path (default: output with .json)");

  // curves
  auto* cur = app.add_subcommand("curves", "Frequency response of the polynomial filter as CSV");
  std::string cur_output = "-";
  PolyParams cur_params;
  cur->add_option("output", cur_output, "CSV path, - for stdout")->capture_default_str();
  cur->add_option("--alpha", cur_params.alpha, "Mid-frequency gain alpha")->capture_default_str();
  cur->add_option("--b", cur_params.b, "p(0)")->capture_default_str();
  cur->add_option("--degree", cur_params.degree, "Polynomial degree")->check(CLI::Range(2, 12))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  auto usage = [&](CLI::App* sub, const std::string& msg) {
    std::cerr << "error: " << msg << "\n\n" << sub->help();
    return kExitUsage;
  };

  try {
    if (*est) return cmd_estimate(est_input, est_flags, est_json);
    if (*deb) {
      if (auto msg = check_output_path(deb_output); !msg.empty()) return usage(deb, msg);
      if (auto msg = check_output_path(deb_report); !deb_report.empty() && !msg.empty()) return usage(deb, msg);
      if (auto msg = check_output_path(deb_mask); !deb_mask.empty() && !msg.empty()) return usage(deb, msg);
      return cmd_deblur(deb_input, deb_output, deb_flags, deb_report, deb_mask);
    }
    if (*cal) {
      if (auto msg = cal_corpus.validate(); !msg.empty()) return usage(cal, msg);
      if (cal_k < kMinCalibrationSamples) return usage(cal, "--k must be at least 100");
      return cmd_calibrate(cal_corpus, cal_k, cal_seed, cal_noise, cal_out, cal_scatter);
    }
    if (*ben) {
      if (ben_pos.size() == 2) ben_corpus.dir = ben_pos[0];
      ben_out = ben_pos.back();
      if (auto msg = ben_corpus.validate(); !msg.empty()) return usage(ben, msg);
      if (auto msg = check_output_path(ben_out); !msg.empty()) return usage(ben, msg);
      ben_cfg.deblur = ben_flags.config();
      ben_cfg.record_timings = !ben_no_timings;
      return cmd_bench(ben_corpus, ben_out, ben_cfg);
    }
    if (*syn) {
      if (auto msg = check_output_path(syn_output); !msg.empty()) return usage(syn, msg);
      syn_sample.params.theta = wrap_angle_pi(syn_theta_deg * kPi / 180.0);
      return cmd_synth(syn_input, syn_output, syn_truth, syn_sample);
    }
    if (*cur) {
      if (cur_output != "-") {
        if (auto msg = check_output_path(cur_output); !msg.empty()) return usage(cur, msg);
      }
      return cmd_curves(cur_output, cur_params);
    }
  } catch (const DegenerateInputError& e) {
    std::cerr << "error: degenerate input: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
