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

#include "mildblur/kernel.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mildblur {

void GaussianParams::validate() const {
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) throw std::invalid_argument("sigma0 must be positive");
  if (!(rho > 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in (0, 1]");
  if (!(theta >= 0.0 && theta < kPi)) throw std::invalid_argument("theta must lie in [0, pi)");
}

double wrap_angle_pi(double angle) {
  double t = std::fmod(angle, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t -= kPi;
  return t;
}

double Kernel::sum() const { return std::accumulate(taps.begin(), taps.end(), 0.0); }

QuadraticForm gaussian_quadratic_form(const GaussianParams& p) {
  const double s2 = p.sigma0 * p.sigma0;
  const double r2 = p.rho * p.rho;
  const double cs = std::cos(p.theta);
  const double sn = std::sin(p.theta);
  QuadraticForm q;
  q.a = cs * cs / (2.0 * s2) + sn * sn / (2.0 * r2 * s2);
  q.b = std::sin(2.0 * p.theta) / (4.0 * s2) * (1.0 / r2 - 1.0);
  q.c = sn * sn / (2.0 * s2) + cs * cs / (2.0 * r2 * s2);
  return q;
}

Kernel make_gaussian_kernel(const GaussianParams& params, double truncation) {
  params.validate();
  if (!(truncation >= 3.0)) throw std::invalid_argument("truncation must be at least 3 sigma");
  const int radius = static_cast<int>(std::ceil(truncation * params.sigma0));
  const QuadraticForm q = gaussian_quadratic_form(params);

  Kernel k;
  k.side = 2 * radius + 1;
  k.taps.assign(static_cast<std::size_t>(k.side) * k.side, 0.0);
  for (int i = 0; i < k.side; ++i) {
    // The form is evaluated on (column, row) offsets; with rows growing
    // downwards this puts the major axis theta counter-clockwise on screen.
    const double y = static_cast<double>(i - radius);
    for (int j = 0; j < k.side; ++j) {
      const double x = static_cast<double>(j - radius);
      k.at(i, j) = std::exp(-(q.a * x * x + 2.0 * q.b * x * y + q.c * y * y));
    }
  }
  const double total = k.sum();
  for (double& t : k.taps) t /= total;
  return k;
}

std::vector<double> gaussian_taps_1d(double sigma, int radius) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double v = std::exp(-0.5 * i * i / (sigma * sigma));
    taps[static_cast<std::size_t>(i + radius)] = v;
    total += v;
  }
  for (double& t : taps) t /= total;
  return taps;
}

void write_kernel_text(const Kernel& kernel, std::ostream& os) {
  os << kernel.side << '\n' << std::setprecision(17);
  for (int i = 0; i < kernel.side; ++i) {
    for (int j = 0; j < kernel.side; ++j) {
      if (j > 0) os << ' ';
      os << kernel.at(i, j);
    }
    os << '\n';
  }
}

Kernel read_kernel_text(std::istream& is) {
  Kernel k;
  if (!(is >> k.side) || k.side < 1 || k.side % 2 == 0) {
    throw std::invalid_argument("kernel text: side must be a positive odd integer");
  }
  k.taps.assign(static_cast<std::size_t>(k.side) * k.side, 0.0);
  for (double& t : k.taps) {
    if (!(is >> t)) throw std::invalid_argument("kernel text: truncated tap list");
  }
  return k;
}

Kernel make_motion_kernel(int length) {
  if (length < 1 || length % 2 == 0) throw std::invalid_argument("motion kernel length must be odd");
  Kernel k;
  k.side = length;
  k.taps.assign(static_cast<std::size_t>(length) * length, 0.0);
  for (int j = 0; j < length; ++j) k.at(length / 2, j) = 1.0 / length;
  return k;
}

}  // namespace mildblur
