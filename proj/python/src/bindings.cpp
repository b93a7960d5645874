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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "mildblur/metrics.hpp"
#include "mildblur/pipeline.hpp"
#include "mildblur/polyfilter.hpp"
#include "mildblur/scenes.hpp"
#include "mildblur/synth.hpp"

namespace py = pybind11;
using namespace mildblur;

namespace {

using FloatArray = py::array_t<float, py::array::c_style | py::array::forcecast>;

// HxW or HxWxC (C in {1, 3}) arrays to planar images and back.
Image from_numpy(const FloatArray& a) {
  if (a.ndim() != 2 && a.ndim() != 3) throw std::invalid_argument("expected an HxW or HxWxC array");
  const int h = static_cast<int>(a.shape(0));
  const int w = static_cast<int>(a.shape(1));
  const int c = a.ndim() == 3 ? static_cast<int>(a.shape(2)) : 1;
  if (c != 1 && c != 3) throw std::invalid_argument("expected 1 or 3 channels");
  Image img(w, h, c);
  const float* src = a.data();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int k = 0; k < c; ++k) img.at(x, y, k) = src[(static_cast<std::size_t>(y) * w + x) * c + k];
  return img;
}

FloatArray to_numpy(const Image& img, bool squeeze) {
  const int h = img.height(), w = img.width(), c = img.channels();
  FloatArray out = squeeze && c == 1 ? FloatArray({h, w}) : FloatArray({h, w, c});
  float* dst = out.mutable_data();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int k = 0; k < c; ++k) dst[(static_cast<std::size_t>(y) * w + x) * c + k] = img.at(x, y, k);
  return out;
}

py::dict estimate_dict(const BlurEstimate& e) {
  py::dict d;
  d["sigma0"] = e.params.sigma0;
  d["rho"] = e.params.rho;
  d["sigma1"] = e.params.sigma1();
  d["theta"] = e.params.theta;
  d["f_theta"] = e.f_theta;
  d["f_theta_perp"] = e.f_theta_perp;
  d["clamped_sigma0"] = e.clamped.sigma0;
  d["clamped_sigma1"] = e.clamped.sigma1;
  return d;
}

}  // namespace

PYBIND11_MODULE(_mildblur, m) {
  m.doc() = "Blind removal of mild Gaussian blur";

  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.def(
      "estimate_blur",
      [](const FloatArray& image, int angles) {
        EstimatorConfig cfg;
        cfg.angles = angles;
        return estimate_dict(estimate_blur(from_numpy(image), default_calibration(), cfg));
      },
      py::arg("image"), py::arg("angles") = kDefaultAngles,
      "Estimated blur {sigma0, rho, sigma1, theta (radians), f_theta, f_theta_perp, clamped_*}.");

  m.def(
      "deblur",
      [](const FloatArray& image, double alpha, double b, int iterations, bool halo_removal,
         const std::string& engine) {
        DeblurConfig cfg;
        cfg.alpha = alpha;
        cfg.b = b;
        cfg.iterations = iterations;
        cfg.halo_removal = halo_removal;
        cfg.engine = parse_engine(engine);
        const Image in = from_numpy(image);
        const auto [out, report] = deblur(in, cfg);
        py::list estimates;
        for (const auto& it : report.iterations) estimates.append(estimate_dict(it.estimate));
        return py::make_tuple(to_numpy(out, image.ndim() == 2), estimates);
      },
      py::arg("image"), py::arg("alpha") = kDefaultAlpha, py::arg("b") = kDefaultB, py::arg("iterations") = 1,
      py::arg("halo_removal") = true, py::arg("engine") = "auto",
      "Deblurred image (clamped to [0, 1]) and the per-iteration estimates.");

  m.def(
      "synthesize_blurry",
      [](const FloatArray& image, double sigma0, double rho, double theta, double noise_sigma, std::uint64_t seed) {
        const BlurSample s{{sigma0, rho, theta}, noise_sigma, seed};
        return to_numpy(synthesize_blurry(from_numpy(image), s), image.ndim() == 2);
      },
      py::arg("image"), py::arg("sigma0"), py::arg("rho") = 1.0, py::arg("theta") = 0.0,
      py::arg("noise_sigma") = kDefaultNoiseSigma, py::arg("seed") = 0);

  m.def(
      "psnr", [](const FloatArray& a, const FloatArray& b) { return psnr(from_numpy(a), from_numpy(b)); },
      py::arg("a"), py::arg("b"));
  m.def(
      "ssim", [](const FloatArray& a, const FloatArray& b) { return ssim(from_numpy(a), from_numpy(b)); },
      py::arg("a"), py::arg("b"));

  m.def(
      "solve_p3", [](double alpha, double b) { return solve_p3(alpha, b).coeffs; }, py::arg("alpha") = kDefaultAlpha,
      py::arg("b") = kDefaultB, "Ascending coefficients of the degree-3 filter polynomial.");
  m.def(
      "solve_general",
      [](int degree, double alpha, double b) { return solve_general({degree, alpha, b}).coeffs; },
      py::arg("degree"), py::arg("alpha") = kDefaultAlpha, py::arg("b") = kDefaultB);

  m.def(
      "dead_leaves",
      [](int width, int height, int channels, std::uint64_t seed) {
        DeadLeavesOptions o;
        o.width = width;
        o.height = height;
        o.channels = channels;
        return to_numpy(dead_leaves(o, seed), channels == 1);
      },
      py::arg("width") = 256, py::arg("height") = 256, py::arg("channels") = 3, py::arg("seed") = 0);
}
