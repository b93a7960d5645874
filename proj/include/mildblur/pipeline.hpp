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

#include <string>
#include <utility>
#include <vector>

#include "mildblur/estimate.hpp"
#include "mildblur/halo.hpp"
#include "mildblur/image.hpp"
#include "mildblur/polyfilter.hpp"
#include "mildblur/smoother.hpp"

namespace mildblur {

enum class EngineChoice { automatic, spatial, fourier };
enum class PrefilterChoice { none, edge_smoother };

/// Engine that actually ran for one pass.
enum class EngineUsed { separable, spatial_2d, fourier };

const char* to_string(EngineChoice e);
const char* to_string(EngineUsed e);
EngineChoice parse_engine(const std::string& name);

struct DeblurConfig {
  double alpha = kDefaultAlpha;
  double b = kDefaultB;
  int iterations = 1;
  bool halo_removal = true;
  bool smooth_mask = false;
  PrefilterChoice prefilter = PrefilterChoice::none;
  EdgeSmootherParams smoother;
  EstimatorConfig estimator;
  CalibrationParams calibration = default_calibration();
  EngineChoice engine = EngineChoice::automatic;

  void validate() const;
};

struct IterationReport {
  BlurEstimate estimate;
  EngineUsed engine = EngineUsed::separable;
  double t_estimate_ms = 0.0;
  double t_deblur_ms = 0.0;
  double t_halo_ms = 0.0;
  double t_total_ms = 0.0;
};

struct RunReport {
  std::vector<IterationReport> iterations;
  double t_total_ms = 0.0;
  /// Blend weights of the last pass; empty when halo removal is off.
  Image last_mask;
};

struct PassResult {
  Image image;  // unclamped
  BlurEstimate estimate;
  IterationReport report;
  Image mask;  // empty when halo removal is off
};

/// Blur estimate -> degree-3 polynomial filter -> optional halo blend. The
/// result is not clamped.
PassResult deblur_pass(const Image& image, const DeblurConfig& config);

/// deblur_pass without the report.
std::pair<Image, BlurEstimate> deblur_once(const Image& image, const DeblurConfig& config);

/// config.iterations passes, re-estimating the blur each time. Only the final
/// output is clamped to [0, 1].
std::pair<Image, RunReport> deblur(const Image& image, const DeblurConfig& config);

/// s = smoother(v), r = v - s, out = deblur(s) + r, clamped to [0, 1].
std::pair<Image, RunReport> deblur_with_prefilter(const Image& image, const DeblurConfig& config,
                                                  const Smoother& smoother);

/// Dispatches on config.prefilter.
std::pair<Image, RunReport> run_pipeline(const Image& image, const DeblurConfig& config);

/// Engine the automatic policy picks for an estimate: separable when the
/// axis is within 1e-3 rad of horizontal/vertical or rho > 0.95.
EngineUsed select_engine(const GaussianParams& params, EngineChoice choice);

/// Apply p(K) for the estimated blur with a given engine.
Image apply_deblur_filter(const Image& image, const GaussianParams& params, const PolyCoefficients& p,
                          EngineUsed engine);

}  // namespace mildblur
