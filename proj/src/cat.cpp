// Copyright 2026 The wnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wnl/cat.hpp"

#include <array>
#include <cmath>

#include "wnl/error.hpp"

namespace wnl {

void CatParams::check() const {
  if (!(std::isfinite(theta) && std::isfinite(delta) && std::isfinite(phi) &&
        std::isfinite(re_beta))) {
    throw Error(ErrorCode::NonFinite, "cat parameters must be finite");
  }
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw Error(ErrorCode::InvalidArgument, "theta must lie in (0, pi/2)");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "delta must lie in [0, 1]");
  }
  if (!(re_beta > 0.0)) throw Error(ErrorCode::InvalidArgument, "re_beta must be positive");
}

CoherentSuperposition cat_state(const CatParams& params) {
  params.check();
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  CoeffMatrix rho(2);
  rho(0, 0) = c * c;
  rho(1, 1) = s * s;
  rho(0, 1) = params.delta * s * c * std::polar(1.0, params.phi);
  rho(1, 0) = std::conj(rho(0, 1));
  return {{Complex(params.re_beta, 0.0), Complex(-params.re_beta, 0.0)}, std::move(rho)};
}

double cat_normalization(const CatParams& params) {
  params.check();
  const double a = params.re_beta;
  return 1.0 + params.delta * std::sin(2.0 * params.theta) * std::cos(params.phi) *
                   std::exp(-2.0 * a * a);
}

double cat_wigner_closed(const CatParams& params, PhasePoint pt) {
  const double a = params.re_beta;
  const double k = 2.0 * kSqrt2 * a;
  const double c = std::cos(params.theta);
  const double s = std::sin(params.theta);
  const double g = -pt.x * pt.x - pt.p * pt.p;
  const double tilde_phi = params.phi - k * pt.p;
  // Bracket divided by Z: cos²θ Z + b + sin²θ/Z, with the e^{-2a²} prefactor
  // folded into each exponent.
  const double left = c * c * std::exp(g - 2.0 * a * a + k * pt.x);
  const double right = s * s * std::exp(g - 2.0 * a * a - k * pt.x);
  const double cross = params.delta * std::sin(2.0 * params.theta) * std::cos(tilde_phi) *
                       std::exp(g);
  return (left + cross + right) / (kPi * cat_normalization(params));
}

CatZeroAnalysis cat_zero_analysis(const CatParams& params, double p) {
  params.check();
  const double a = params.re_beta;
  const double c2 = std::cos(params.theta) * std::cos(params.theta);
  const double s2 = std::sin(params.theta) * std::sin(params.theta);
  CatZeroAnalysis z;
  z.tilde_phi = params.phi - 2.0 * kSqrt2 * a * p;
  z.b = std::exp(2.0 * a * a) * params.delta * std::sin(2.0 * params.theta) *
        std::cos(z.tilde_phi);
  const double disc = z.b * z.b - 4.0 * c2 * s2;
  const Complex root = disc >= 0.0 ? Complex(std::sqrt(disc), 0.0) : Complex(0.0, std::sqrt(-disc));
  z.z_plus = (-z.b + root) / (2.0 * c2);
  z.z_minus = (-z.b - root) / (2.0 * c2);
  z.z_m = -z.b / (2.0 * c2);
  const double cp = std::cos(z.tilde_phi);
  z.p_of_zm = s2 * (1.0 - params.delta * params.delta * cp * cp * std::exp(4.0 * a * a));
  return z;
}

double critical_delta_analytic(double re_beta) {
  if (!(re_beta > 0.0) || !std::isfinite(re_beta)) {
    throw Error(ErrorCode::InvalidArgument, "re_beta must be positive");
  }
  return std::min(1.0, std::exp(-2.0 * re_beta * re_beta));
}

PhasePoint predicted_min_location(const CatParams& params) {
  params.check();
  if (!(params.delta > critical_delta_analytic(params.re_beta))) {
    throw Error(ErrorCode::NotNegative, "delta does not exceed the critical coherence");
  }
  const double k = 2.0 * kSqrt2 * params.re_beta;
  const double m = std::round((params.phi - kPi) / (2.0 * kPi));
  PhasePoint pt{std::log(std::tan(params.theta)) / k, (params.phi - kPi - 2.0 * kPi * m) / k};

  auto f = [&params](double x, double p) { return cat_wigner_closed(params, {x, p}); };
  constexpr double h = 1e-4;
  for (int iter = 0; iter < 100; ++iter) {
    const double f0 = f(pt.x, pt.p);
    const double fxp = f(pt.x + h, pt.p);
    const double fxm = f(pt.x - h, pt.p);
    const double fpp = f(pt.x, pt.p + h);
    const double fpm = f(pt.x, pt.p - h);
    const std::array<double, 2> grad{(fxp - fxm) / (2 * h), (fpp - fpm) / (2 * h)};
    const double hxx = (fxp - 2 * f0 + fxm) / (h * h);
    const double hpp = (fpp - 2 * f0 + fpm) / (h * h);
    const double hxp = (f(pt.x + h, pt.p + h) - f(pt.x + h, pt.p - h) - f(pt.x - h, pt.p + h) +
                        f(pt.x - h, pt.p - h)) / (4 * h * h);
    const double det = hxx * hpp - hxp * hxp;
    std::array<double, 2> step{};
    if (hxx > 0.0 && det > 0.0) {
      step = {-(hpp * grad[0] - hxp * grad[1]) / det, -(hxx * grad[1] - hxp * grad[0]) / det};
    } else {
      step = {-grad[0], -grad[1]};
    }
    double t = 1.0;
    while (t > 1e-12 && f(pt.x + t * step[0], pt.p + t * step[1]) > f0) t *= 0.5;
    if (t <= 1e-12) break;
    pt = {pt.x + t * step[0], pt.p + t * step[1]};
    if (std::hypot(t * step[0], t * step[1]) < 1e-12) break;
  }
  return pt;
}

}  // namespace wnl
