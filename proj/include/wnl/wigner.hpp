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

#include <span>
#include <vector>

#include "wnl/phase_core.hpp"

namespace wnl {

/// Conjugate variables (λ, η) of the characteristic function; λ has units
/// of 1/σ, η of σ.
struct CharacteristicPoint {
  double lambda = 0.0;
  double eta = 0.0;
};

/// Trapezoidal grid for the inverse transform. The cutoff is in σ = 1
/// units: the integration runs over λσ, η/σ ∈ [-L, L].
struct QuadratureSpec {
  double cutoff = 8.0;
  int n_lambda = 512;
  int n_eta = 512;

  void check() const;
  /// L = max(8 (1 + max|β|), √2 (2 max|β| + 8)), n = 512.
  static QuadratureSpec for_state(const CoherentSuperposition& state);
};

/// Signature shared by cross-Wigner kernels, so verification suites can
/// run against a substituted kernel.
using CrossWignerKernel = Complex (*)(Complex beta_j, Complex beta_k, PhasePoint pt,
                                      double sigma);

/// Wigner function of the dyad |β_j⟩⟨β_k|; the exponent is assembled
/// before the single exponential.
Complex cross_wigner(Complex beta_j, Complex beta_k, PhasePoint pt, double sigma = 1.0) noexcept;

/// Re N⁻¹ Σ_jk ρ_jk W_jk, full double sum. Throws NonHermitianAccumulation
/// if the imaginary residual exceeds 1e-8 (relative to the term magnitudes
/// when those exceed one).
double wigner_direct(const CoherentSuperposition& state, PhasePoint pt);
double wigner_direct(const CoherentSuperposition& state, PhasePoint pt, CrossWignerKernel kernel);

/// Closed form of Tr[e^{i(λx + ηp)} ρ] on the coherent components.
Complex quasi_characteristic(const CoherentSuperposition& state, CharacteristicPoint cp);

/// Characteristic function tabulated once on the quadrature grid; each
/// evaluation is then an O(n_lambda · n_eta) separable sum.
class CharacteristicReconstruction {
 public:
  /// Throws CutoffTooSmall when |G| on the boundary of the box exceeds 1e-10.
  CharacteristicReconstruction(const CoherentSuperposition& state, const QuadratureSpec& quad);

  double operator()(PhasePoint pt) const;
  double boundary_max() const noexcept { return boundary_max_; }
  const QuadratureSpec& spec() const noexcept { return quad_; }

 private:
  QuadratureSpec quad_;
  double sigma_;
  double boundary_max_ = 0.0;
  std::vector<double> lambda_;
  std::vector<double> eta_;
  // Row-major (lambda outer), trapezoid weights and 1/(4π²) folded in.
  std::vector<Complex> weighted_g_;
};

inline constexpr double kBoundaryCharacteristicTolerance = 1e-10;

double wigner_from_characteristic(const CoherentSuperposition& state, PhasePoint pt,
                                  const QuadratureSpec& quad);

struct WeightedBeta {
  Complex beta;
  double weight = 0.0;
};

/// Sum of nonnegative Gaussians (1/π) Σ w_i exp(-(X-X_i)²/σ² - σ²(P-P_i)²).
/// Weights must be >= 0 (NegativeWeight) and sum to one within 1e-12.
double wigner_diagonal_mixture(std::span<const WeightedBeta> components, PhasePoint pt,
                               double sigma = 1.0);

/// Unnormalized pieces of N·W at a point: populations (never negative),
/// interference Σ_{j<k} 2 Re ρ_jk W_jk, and Σ_{j<k} 2|ρ_jk W_jk|. The
/// last gives sign tests a scale when the two parts nearly cancel.
struct WignerTerms {
  double diagonal = 0.0;
  double coherent = 0.0;
  double coherent_magnitude = 0.0;
};

/// Point evaluator with the per-pair constants precomputed. Used by the
/// minimizer, where the same state is evaluated many thousands of times.
class WignerEvaluator {
 public:
  explicit WignerEvaluator(const CoherentSuperposition& state);

  WignerTerms terms(PhasePoint pt) const;
  double operator()(PhasePoint pt) const;
  double normalization() const noexcept { return norm_; }
  /// Σ_j ρ_jj and Σ_{j≠k} ρ_jk ⟨β_k|β_j⟩, so N(Δ) = diagonal + Δ·coherent.
  double diagonal_norm() const noexcept { return diag_norm_; }
  double coherent_norm() const noexcept { return norm_ - diag_norm_; }

 private:
  struct Pair {
    double x_mid, p_mid, dx, dp;
    Complex coeff;  // weight · ρ_jk · e^{i(X_j P_k - X_k P_j)/2} / π
    bool diagonal;
  };
  std::vector<Pair> pairs_;
  double sigma_;
  double norm_;
  double diag_norm_;
};

}  // namespace wnl
