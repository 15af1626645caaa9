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

#include <Eigen/Dense>

#include "wnl/phase_core.hpp"
#include "wnl/wigner.hpp"

namespace wnl {

/// Smallest truncation holding a coherent state of modulus `radius`:
/// ceil(r² + 8 √(r² + 1)).
int min_fock_dimension(double radius);

/// Truncated ladder and quadrature operators with x = σ(a + a†)/√2 and
/// p = i(a† - a)/(√2 σ). The spectral decompositions of x and p are kept so
/// exponentials e^{itx}, e^{itp} are cheap.
class FockOperatorSet {
 public:
  explicit FockOperatorSet(int dim, double sigma = 1.0);

  int dim() const noexcept { return dim_; }
  double sigma() const noexcept { return sigma_; }
  const Eigen::MatrixXcd& a() const noexcept { return a_; }
  const Eigen::MatrixXcd& a_dag() const noexcept { return a_dag_; }
  const Eigen::MatrixXcd& x() const noexcept { return x_; }
  const Eigen::MatrixXcd& p() const noexcept { return p_; }

  Eigen::MatrixXcd exp_ix(double t) const;  // e^{i t x}
  Eigen::MatrixXcd exp_ip(double t) const;  // e^{i t p}

  /// max |[x,p] - i| over the leading (dim-1)×(dim-1) block.
  double commutator_residual() const;

 private:
  int dim_;
  double sigma_;
  Eigen::MatrixXcd a_, a_dag_, x_, p_;
  Eigen::MatrixXcd x_vectors_, p_vectors_;
  Eigen::VectorXd x_values_, p_values_;
};

/// e^{i t H} for Hermitian H via its eigendecomposition.
Eigen::MatrixXcd exp_i_hermitian(const Eigen::MatrixXcd& h, double t);

struct FockState {
  int dim = 0;
  Eigen::VectorXcd amplitudes;

  double norm_deficit() const { return 1.0 - amplitudes.squaredNorm(); }
};

/// Number-basis expansion e^{-|β|²/2} β^n/√n!. Throws TruncationTooSmall
/// when dim < min_fock_dimension(|β|).
FockState coherent_fock(Complex beta, int dim);

/// N⁻¹ Σ ρ_jk |β_j⟩⟨β_k| in the truncated basis.
Eigen::MatrixXcd fock_density(const CoherentSuperposition& state, int dim);

/// Tr[e^{iλx/2} e^{iηp/2} ρ e^{iηp/2} e^{iλx/2}].
Complex characteristic_sequential(const CoherentSuperposition& state, CharacteristicPoint cp,
                                  int dim);

/// Tr[e^{i(λx + ηp)} ρ] with a single exponential.
Complex characteristic_displacement(const CoherentSuperposition& state, CharacteristicPoint cp,
                                    int dim);

}  // namespace wnl
