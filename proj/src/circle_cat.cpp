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

#include "wnl/circle_cat.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "wnl/bessel.hpp"
#include "wnl/compensated.hpp"
#include "wnl/error.hpp"

namespace wnl {

namespace {

double j0_over_i0(double r) { return bessel_j(0, r) / bessel_i(0, r); }

// Golden-section search for a minimum of f on [lo, hi].
double golden_minimum(const std::function<double(double)>& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-13 * (1.0 + std::abs(a))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

void CircleCatParams::check() const {
  if (m < 4 || m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "M must be even and >= 4");
  if (!(std::isfinite(d) && d >= 1.0)) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "delta must lie in [0, 1]");
  }
}

CoherentSuperposition circle_state(const CircleCatParams& params) {
  params.check();
  const auto n = static_cast<std::size_t>(params.m);
  std::vector<Complex> betas(n);
  CoeffMatrix rho(n);
  for (std::size_t k = 0; k < n; ++k) {
    betas[k] = std::polar(params.d, 2.0 * kPi * static_cast<double>(k + 1) / params.m);
    for (std::size_t j = 0; j < n; ++j) {
      rho(j, k) = ((j == k ? 1.0 - params.delta : 0.0) + params.delta) / params.m;
    }
  }
  return {std::move(betas), std::move(rho)};
}

double log_packing_series(int m, double d) {
  const double log_d2 = 2.0 * std::log(d);
  double peak = 0.0;
  std::vector<double> logs;
  for (int q = 0;; ++q) {
    const double qm = static_cast<double>(q) * m;
    const double v = qm * log_d2 - std::lgamma(qm + 1.0);
    logs.push_back(v);
    peak = std::max(peak, v);
    if (q > 0 && v < logs[static_cast<std::size_t>(q) - 1] && v < peak - 50.0) break;
  }
  CompensatedSum<double> sum;
  for (double v : logs) sum += std::exp(v - peak);
  return peak + std::log(sum.value());
}

CircleWigner::CircleWigner(const CircleCatParams& params)
    : params_(params),
      norm_(circle_state(params).normalization()),
      log_series_(log_packing_series(params.m, params.d)) {}

double CircleWigner::exact(PolarPoint pt) const {
  const int m = params_.m;
  const double d2 = params_.d * params_.d;
  const double r = 2.0 * kSqrt2 * pt.r() * params_.d;
  const double base = -pt.r() * pt.r() - d2;
  CompensatedSum<double> sum;
  for (int j = 1; j <= m; ++j) {
    const double tj = 2.0 * kPi * j / m;
    for (int k = j; k <= m; ++k) {
      const double weight = (j == k ? 1.0 - params_.delta : 0.0) + params_.delta;
      if (weight == 0.0) continue;
      const double tk = 2.0 * kPi * k / m;
      const double big_phi = 0.5 * (tj - tk);
      const double big_lambda = 0.5 * (tj + tk);
      const double rc = r * std::cos(pt.phi() - big_lambda);
      const double re = base - d2 * std::cos(2.0 * big_phi) + rc * std::cos(big_phi);
      const double im = -d2 * std::sin(2.0 * big_phi) + rc * std::sin(big_phi);
      sum += (j == k ? 1.0 : 2.0) * weight * std::exp(re) * std::cos(im);
    }
  }
  return sum.value() / (kPi * norm_ * m);
}

double CircleWigner::bessel(double radius) const {
  if (!(radius >= 0.0 && radius < params_.validity_radius())) {
    throw Error(ErrorCode::OutsideValidityWindow,
                "R = " + std::to_string(radius) + " outside R < M/(2 sqrt2 d)");
  }
  const double d2 = params_.d * params_.d;
  const double r = 2.0 * kSqrt2 * radius * params_.d;
  const double envelope = -radius * radius - d2;
  const double incoherent =
      (1.0 - params_.delta) * std::exp(envelope - d2) * bessel_i(0, r);
  const double coherent = params_.delta * params_.m *
                          std::exp(envelope + log_series_) * bessel_j(0, r);
  return (incoherent + coherent) / (kPi * norm_);
}

double circle_wigner_exact(const CircleCatParams& params, PolarPoint pt) {
  return CircleWigner(params).exact(pt);
}

double circle_wigner_bessel(const CircleCatParams& params, double radius) {
  return CircleWigner(params).bessel(radius);
}

CircleBound critical_delta_bound(const CircleCatParams& params) {
  if (!(params.d >= 1.0) || params.m < 1) {
    throw Error(ErrorCode::InvalidArgument, "bound needs d >= 1 and M >= 1");
  }
  CircleBound out;
  double best = 1.0;
  for (int n = 1; n <= 4; ++n) {
    const double sign = n % 2 == 1 ? 1.0 : -1.0;
    const double r = golden_minimum([sign](double x) { return sign * j0_over_i0(x); },
                                    n * kPi - 1.0, n * kPi + 1.0);
    out.stationary[static_cast<std::size_t>(n) - 1] = r;
    const double ratio = j0_over_i0(r);
    if (ratio >= 0.0) continue;
    // 1/(1 - e^{d²} M ratio) in the exponent so large d stays finite.
    const double log_scale = params.d * params.d + std::log(params.m * -ratio);
    const double bound = log_scale > 700.0 ? std::exp(-log_scale) : 1.0 / (1.0 + std::exp(log_scale));
    if (bound < best) {
      best = bound;
      out.r_star = r;
      out.ratio = ratio;
    }
  }
  out.delta_bar = best;
  return out;
}

}  // namespace wnl
