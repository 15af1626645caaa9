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

#include "wnl/phase_core.hpp"

namespace wnl {

/// Two-component cat on the position axis: β = ±re_beta with populations
/// cos²θ, sin²θ and coherence Δ sinθ cosθ e^{iφ}. Any finite φ is
/// accepted; W is 2π-periodic in it.
struct CatParams {
  double theta = kPi / 4.0;
  double delta = 1.0;
  double phi = 0.0;
  double re_beta = 1.0;

  /// Requires 0 < θ < π/2, 0 <= Δ <= 1, re_beta > 0, finite φ.
  void check() const;
};

CoherentSuperposition cat_state(const CatParams& params);

/// 1 + Δ sin2θ cosφ e^{-2 re_beta²}.
double cat_normalization(const CatParams& params);

/// Closed form e^{-X²-P²-2a²}(cos²θ Z² + bZ + sin²θ)/(πNZ), Z = e^{2√2 aX},
/// b = e^{2a²} Δ sin2θ cos φ̃, φ̃ = φ - 2√2 aP. Evaluated term by term in the
/// exponent so large |X| does not overflow Z.
double cat_wigner_closed(const CatParams& params, PhasePoint pt);

/// Quadratic cos²θ Z² + bZ + sin²θ at a fixed momentum.
struct CatZeroAnalysis {
  Complex z_plus;
  Complex z_minus;
  double z_m = 0.0;
  double p_of_zm = 0.0;
  double b = 0.0;
  double tilde_phi = 0.0;

  bool real_roots() const noexcept { return z_plus.imag() == 0.0; }
};

CatZeroAnalysis cat_zero_analysis(const CatParams& params, double p);

/// e^{-2 re_beta²}, at most one. Throws InvalidArgument for re_beta <= 0.
double critical_delta_analytic(double re_beta);

/// Location of the most negative point: P* on the fringe cos φ̃ = -1 closest
/// to P = 0, X* seeded at Z = tanθ and polished by Newton's method on the
/// closed form. Throws NotNegative when Δ <= Δ_c.
PhasePoint predicted_min_location(const CatParams& params);

}  // namespace wnl
