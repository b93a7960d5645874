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

#include <nlohmann/json.hpp>

#include "mildblur/calibrate.hpp"
#include "mildblur/estimate.hpp"
#include "mildblur/pipeline.hpp"
#include "mildblur/synth.hpp"

namespace mildblur {

/// "sigma0=... rho=... theta_degrees=... sigma1=... f_theta=... f_theta_perp=... clamped=..."
std::string estimate_line(const BlurEstimate& e);

nlohmann::json to_json(const BlurEstimate& e);
nlohmann::json to_json(const RunReport& r);
nlohmann::json to_json(const BlurSample& s);

/// {c_slope, sigma_b, mae, K, seed}, plus free-form extras.
nlohmann::json calibration_record(const CalibrationResult& r);

/// Reads c_slope and sigma_b from a calibration record file.
CalibrationParams read_calibration(const std::filesystem::path& path);

/// Pretty-printed JSON to a file; throws IoError on failure.
void write_json(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace mildblur
