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

#pragma once

#include <array>

#include "wnl/phase_core.hpp"

namespace wnl {

/// M coherent states β_k = d e^{2πik/M} with uniform coherence Δ:
/// ρ_jk = ((1-Δ)δ_jk + Δ)/M.
struct CircleCatParams {
  int m = 64;
  double d = 1.0;
  double delta = 1.0;

  /// Requires even m >= 4, d >= 1, 0 <= Δ <= 1.
  void check() const;
  /// M > d², the regime where the Bessel reduction is expected to hold.
  bool highly_packed() const noexcept { return m > d * d; }
  /// R < M/(2√2 d).
  double validity_radius() const noexcept { return m / (2.0 * kSqrt2 * d); }
};

CoherentSuperposition circle_state(const CircleCatParams& params);

/// log Σ_{q>=0} d^{2qM}/(qM)!, the wrap-around series in the coherent
/// overlaps of the circle.
double log_packing_series(int m, double d);

/// Evaluators sharing the exact normalization of one parameter set.
class CircleWigner {
 public:
  explicit CircleWigner(const CircleCatParams& params);

  /// Polar double sum, (j,k) and (k,j) folded into one real part.
  double exact(PolarPoint pt) const;
  /// Leading Jacobi–Anger order
  /// e^{-R²-d²}/(πN) [(1-Δ) e^{-d²} I0(r) + Δ M S J0(r)], r = 2√2 R d,
  /// with N exact and S = Σ_q d^{2qM}/(qM)!. Throws OutsideValidityWindow
  /// for R >= validity_radius().
  double bessel(double radius) const;

  double normalization() const noexcept { return norm_; }
  const CircleCatParams& params() const noexcept { return params_; }

 private:
  CircleCatParams params_;
  double norm_;
  double log_series_;
};

double circle_wigner_exact(const CircleCatParams& params, PolarPoint pt);
double circle_wigner_bessel(const CircleCatParams& params, double radius);

struct CircleBound {
  double delta_bar = 1.0;
  double r_star = 0.0;
  double ratio = 0.0;  // J0(r*)/I0(r*)
  /// Stationary points of J0/I0 near nπ, n = 1..4.
  std::array<double, 4> stationary{};
};

/// min_r 1/(1 - e^{d²} M J0(r)/I0(r)), taken over the stationary points.
CircleBound critical_delta_bound(const CircleCatParams& params);

}  // namespace wnl
