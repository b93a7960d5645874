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

#include "mildblur/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "mildblur/convolve.hpp"

namespace mildblur {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

constexpr double kAxisSnap = 1e-3;
constexpr double kIsotropicRho = 0.95;

}  // namespace

const char* to_string(EngineChoice e) {
  switch (e) {
    case EngineChoice::automatic:
      return "auto";
    case EngineChoice::spatial:
      return "spatial";
    case EngineChoice::fourier:
      return "fourier";
  }
  return "?";
}

const char* to_string(EngineUsed e) {
  switch (e) {
    case EngineUsed::separable:
      return "separable";
    case EngineUsed::spatial_2d:
      return "spatial";
    case EngineUsed::fourier:
      return "fourier";
  }
  return "?";
}

EngineChoice parse_engine(const std::string& name) {
  if (name == "auto") return EngineChoice::automatic;
  if (name == "spatial") return EngineChoice::spatial;
  if (name == "fourier") return EngineChoice::fourier;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

void DeblurConfig::validate() const {
  if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (!std::isfinite(alpha) || !std::isfinite(b)) throw std::invalid_argument("alpha and b must be finite");
  if (!(estimator.quantile >= 0.0 && estimator.quantile < 0.5)) {
    throw std::invalid_argument("quantile must lie in [0, 0.5)");
  }
  if (estimator.angles < 4) throw std::invalid_argument("at least 4 angles are required");
  calibration.validate();
}

namespace {

bool near_axis(double theta) {
  const double t = wrap_angle_pi(theta);
  return t <= kAxisSnap || kPi - t <= kAxisSnap || std::abs(t - kPi / 2.0) <= kAxisSnap;
}

// The separable stand-in for an estimate: axis-aligned kernels keep their
// shape with theta snapped; nearly isotropic ones become isotropic with the
// same covariance trace.
GaussianParams separable_stand_in(const GaussianParams& p) {
  if (near_axis(p.theta)) {
    const double t = wrap_angle_pi(p.theta);
    const double snapped = std::abs(t - kPi / 2.0) <= kAxisSnap ? kPi / 2.0 : 0.0;
    return GaussianParams{p.sigma0, p.rho, snapped};
  }
  const double s1 = p.sigma1();
  return GaussianParams{std::sqrt(0.5 * (p.sigma0 * p.sigma0 + s1 * s1)), 1.0, 0.0};
}

}  // namespace

EngineUsed select_engine(const GaussianParams& params, EngineChoice choice) {
  const bool separable = near_axis(params.theta) || params.rho > kIsotropicRho;
  switch (choice) {
    case EngineChoice::fourier:
      return EngineUsed::fourier;
    case EngineChoice::spatial:
      return separable ? EngineUsed::separable : EngineUsed::spatial_2d;
    case EngineChoice::automatic:
      return separable ? EngineUsed::separable : EngineUsed::fourier;
  }
  return EngineUsed::fourier;
}

Image apply_deblur_filter(const Image& image, const GaussianParams& params, const PolyCoefficients& p,
                          EngineUsed engine) {
  switch (engine) {
    case EngineUsed::separable: {
      const GaussianParams sep = separable_stand_in(params);
      return apply_poly_with(image, p, [&](const Image& v) { return separable_gaussian(v, sep); });
    }
    case EngineUsed::spatial_2d:
      return apply_poly_spatial(image, params, p);
    case EngineUsed::fourier:
      return apply_poly_fourier(image, make_gaussian_kernel(params), p, SpectrumCorrection::none);
  }
  throw std::logic_error("unreachable");
}

PassResult deblur_pass(const Image& image, const DeblurConfig& config) {
  config.validate();
  const auto start = Clock::now();
  PassResult result;

  auto t0 = Clock::now();
  result.estimate = estimate_blur(image, config.calibration, config.estimator);
  result.report.t_estimate_ms = elapsed_ms(t0);

  t0 = Clock::now();
  const PolyCoefficients p = solve_p3(config.alpha, config.b);
  result.report.engine = select_engine(result.estimate.params, config.engine);
  Image restored = apply_deblur_filter(image, result.estimate.params, p, result.report.engine);
  result.report.t_deblur_ms = elapsed_ms(t0);

  t0 = Clock::now();
  if (config.halo_removal) {
    auto [blended, mask] = blend(image, restored, BlendOptions{config.smooth_mask});
    result.image = std::move(blended);
    result.mask = std::move(mask.z);
  } else {
    result.image = std::move(restored);
  }
  result.report.t_halo_ms = config.halo_removal ? elapsed_ms(t0) : 0.0;

  result.report.estimate = result.estimate;
  result.report.t_total_ms = elapsed_ms(start);
  return result;
}

std::pair<Image, BlurEstimate> deblur_once(const Image& image, const DeblurConfig& config) {
  PassResult r = deblur_pass(image, config);
  return {std::move(r.image), r.estimate};
}

std::pair<Image, RunReport> deblur(const Image& image, const DeblurConfig& config) {
  config.validate();
  const auto start = Clock::now();
  RunReport report;
  Image current = image;
  for (int i = 0; i < config.iterations; ++i) {
    PassResult r = deblur_pass(current, config);
    report.iterations.push_back(r.report);
    report.last_mask = std::move(r.mask);
    current = std::move(r.image);
  }
  report.t_total_ms = elapsed_ms(start);
  return {clamp(current), std::move(report)};
}

std::pair<Image, RunReport> deblur_with_prefilter(const Image& image, const DeblurConfig& config,
                                                  const Smoother& smoother) {
  const Image smooth = smoother(image);
  if (!smooth.same_shape(image)) throw std::invalid_argument("smoother changed the image shape");
  const Image residual = subtract(image, smooth);

  config.validate();
  const auto start = Clock::now();
  RunReport report;
  Image current = smooth;
  for (int i = 0; i < config.iterations; ++i) {
    PassResult r = deblur_pass(current, config);
    report.iterations.push_back(r.report);
    report.last_mask = std::move(r.mask);
    current = std::move(r.image);
  }
  report.t_total_ms = elapsed_ms(start);
  return {clamp(add(current, residual)), std::move(report)};
}

std::pair<Image, RunReport> run_pipeline(const Image& image, const DeblurConfig& config) {
  switch (config.prefilter) {
    case PrefilterChoice::none:
      return deblur(image, config);
    case PrefilterChoice::edge_smoother:
      return deblur_with_prefilter(image, config, make_edge_smoother(config.smoother));
  }
  throw std::logic_error("unreachable");
}

}  // namespace mildblur
