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

#include "mildblur/serialize.hpp"

#include <cstdio>
#include <fstream>

#include "mildblur/image.hpp"

namespace mildblur {
namespace {

double degrees(double rad) { return rad * 180.0 / kPi; }

}  // namespace

std::string estimate_line(const BlurEstimate& e) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "sigma0=%.4f rho=%.4f theta_degrees=%.2f sigma1=%.4f f_theta=%.6f f_theta_perp=%.6f",
                e.params.sigma0, e.params.rho, degrees(e.params.theta), e.params.sigma1(), e.f_theta, e.f_theta_perp);
  std::string out = buf;
  if (e.clamped.sigma0 || e.clamped.sigma1) {
    out += " clamped=";
    out += e.clamped.sigma0 ? (e.clamped.sigma1 ? "sigma0,sigma1" : "sigma0") : "sigma1";
  }
  return out;
}

nlohmann::json to_json(const BlurEstimate& e) {
  return {{"sigma0", e.params.sigma0},
          {"rho", e.params.rho},
          {"sigma1", e.params.sigma1()},
          {"theta_degrees", degrees(e.params.theta)},
          {"f_theta", e.f_theta},
          {"f_theta_perp", e.f_theta_perp},
          {"clamped", {{"sigma0", e.clamped.sigma0}, {"sigma1", e.clamped.sigma1}}}};
}

nlohmann::json to_json(const RunReport& r) {
  nlohmann::json its = nlohmann::json::array();
  for (const auto& it : r.iterations) {
    its.push_back({{"estimate", to_json(it.estimate)},
                   {"engine", to_string(it.engine)},
                   {"t_estimate_ms", it.t_estimate_ms},
                   {"t_deblur_ms", it.t_deblur_ms},
                   {"t_halo_ms", it.t_halo_ms},
                   {"t_total_ms", it.t_total_ms}});
  }
  return {{"iterations", its}, {"t_total_ms", r.t_total_ms}};
}

nlohmann::json to_json(const BlurSample& s) {
  return {{"sigma0", s.params.sigma0},
          {"rho", s.params.rho},
          {"theta_degrees", degrees(s.params.theta)},
          {"noise_sigma", s.noise_sigma},
          {"seed", s.seed}};
}

nlohmann::json calibration_record(const CalibrationResult& r) {
  return {{"c_slope", r.params.c_slope},
          {"sigma_b", r.params.sigma_b},
          {"mae", r.mae},
          {"K", r.k},
          {"seed", r.seed},
          {"skipped", r.skipped}};
}

CalibrationParams read_calibration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open calibration file " + path.string());
  CalibrationParams p;
  try {
    const auto j = nlohmann::json::parse(in);
    p.c_slope = j.at("c_slope").get<double>();
    p.sigma_b = j.at("sigma_b").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed calibration file " + path.string() + ": " + e.what());
  }
  p.validate();
  return p;
}

void write_json(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace mildblur
