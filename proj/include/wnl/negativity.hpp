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

#include <functional>
#include <string>

#include "wnl/phase_core.hpp"

namespace wnl {

struct SearchBox {
  double x_min = -1.0;
  double x_max = 1.0;
  double p_min = -1.0;
  double p_max = 1.0;
};

/// Coarse scan plus multistart coordinate descent.
struct MinimizationSpec {
  SearchBox box;
  int nx = 101;
  int np = 101;
  int starts = 5;
  int refine_iters = 400;
  double refine_tol = 1e-10;
  /// Certification threshold: negative iff min W < -abs_tol.
  double abs_tol = 1e-12;

  void check() const;
  PhaseGrid grid() const { return {box.x_min, box.x_max, box.p_min, box.p_max, nx, np}; }

  /// Box ±(√2 max|β| + 5) (σ-scaled per axis); grid step at most a sixth of
  /// the fringe spacing π/(2√2 max|β|), at least 101 nodes, odd counts so
  /// the origin is a node.
  static MinimizationSpec for_state(const CoherentSuperposition& state);
};

struct MinimumResult {
  double value = 0.0;
  PhasePoint argmin;
  double coarse_value = 0.0;
  long evaluations = 0;
};

/// Throws BoxTooSmall when a negative minimum sits on the box boundary.
/// Deterministic: equal coarse values are ranked by (x index, p index).
MinimumResult minimize_wigner(const CoherentSuperposition& state, const MinimizationSpec& spec);

struct Certificate {
  bool negative = false;
  double min = 0.0;
  PhasePoint witness;
  long evaluations = 0;
};

Certificate certify_negativity(const CoherentSuperposition& state, const MinimizationSpec& spec);

enum class BisectionScale { Linear, Logarithmic };

struct BisectionOptions {
  /// Absolute bracket width for Linear, relative (to the upper end) for
  /// Logarithmic.
  double delta_tol = 1e-3;
  BisectionScale scale = BisectionScale::Linear;
  /// A member counts as negative iff N·W_min < -sign_tol · (populations +
  /// |interference|) at the witness.
  double sign_tol = 1e-12;
  /// Lower end of the logarithmic bracket.
  double log_floor = 1e-300;
  int max_iterations = 4000;
};

struct CriticalCoherenceResult {
  double delta_c = 0.0;
  double lower = 0.0;  // largest Δ found nonnegative
  double upper = 1.0;  // smallest Δ found negative
  double bracket_width = 1.0;
  PhasePoint minimizer;  // witness at `upper`
  long evaluations = 0;
  int iterations = 0;
  std::string method = "bisection";
};

/// Family Δ -> state, Δ in [0, 1].
using StateFamily = std::function<CoherentSuperposition(double)>;

/// Bisection over the dephasing family of `coherent` (its off-diagonal
/// coefficients scaled by Δ). N·W is affine in Δ, so the coarse fields are
/// computed once. `spec` is used for every member.
CriticalCoherenceResult critical_delta_numeric(const CoherentSuperposition& coherent,
                                               const MinimizationSpec& spec,
                                               const BisectionOptions& options = {});

/// Same bisection for an arbitrary family; each member gets its own scan.
/// Throws NoSignChange when Δ = 0 and Δ = 1 agree in sign and
/// NonMonotoneFamily when samples at Δ = 1/4, 1/2, 3/4 (geometric for the
/// logarithmic scale) are not ordered.
CriticalCoherenceResult critical_delta_numeric(const StateFamily& family,
                                               const MinimizationSpec& spec,
                                               const BisectionOptions& options = {});

}  // namespace wnl
