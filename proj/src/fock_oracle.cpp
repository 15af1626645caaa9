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

#include "wnl/fock_oracle.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "wnl/error.hpp"

namespace wnl {

namespace {

Eigen::MatrixXcd exp_from_spectrum(const Eigen::MatrixXcd& vectors, const Eigen::VectorXd& values,
                                   double t) {
  Eigen::VectorXcd phases(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) phases(i) = std::polar(1.0, t * values(i));
  return vectors * phases.asDiagonal() * vectors.adjoint();
}

void require_dimension(const CoherentSuperposition& state, CharacteristicPoint cp, int dim) {
  const double s = state.sigma();
  const double alpha = std::hypot(cp.lambda * s, cp.eta / s) / kSqrt2;
  const int need = min_fock_dimension(state.max_abs_beta() + 0.5 * alpha);
  if (dim < need) {
    throw Error(ErrorCode::TruncationTooSmall,
                "dimension " + std::to_string(dim) + " below required " + std::to_string(need));
  }
}

}  // namespace

int min_fock_dimension(double radius) {
  const double r2 = radius * radius;
  return static_cast<int>(std::ceil(r2 + 8.0 * std::sqrt(r2 + 1.0)));
}

Eigen::MatrixXcd exp_i_hermitian(const Eigen::MatrixXcd& h, double t) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  if (eig.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "eigendecomposition failed");
  }
  return exp_from_spectrum(eig.eigenvectors(), eig.eigenvalues(), t);
}

FockOperatorSet::FockOperatorSet(int dim, double sigma) : dim_(dim), sigma_(sigma) {
  if (dim < 8) throw Error(ErrorCode::TruncationTooSmall, "Fock dimension must be >= 8");
  if (!(sigma > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be positive");
  a_ = Eigen::MatrixXcd::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a_(n - 1, n) = std::sqrt(static_cast<double>(n));
  a_dag_ = a_.adjoint();
  x_ = (sigma / kSqrt2) * (a_dag_ + a_);
  p_ = (Complex(0.0, 1.0) / (kSqrt2 * sigma)) * (a_dag_ - a_);

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ex(x_);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ep(p_);
  if (ex.info() != Eigen::Success || ep.info() != Eigen::Success) {
    throw Error(ErrorCode::InvalidArgument, "eigendecomposition failed");
  }
  x_vectors_ = ex.eigenvectors();
  x_values_ = ex.eigenvalues();
  p_vectors_ = ep.eigenvectors();
  p_values_ = ep.eigenvalues();
}

Eigen::MatrixXcd FockOperatorSet::exp_ix(double t) const {
  return exp_from_spectrum(x_vectors_, x_values_, t);
}

Eigen::MatrixXcd FockOperatorSet::exp_ip(double t) const {
  return exp_from_spectrum(p_vectors_, p_values_, t);
}

double FockOperatorSet::commutator_residual() const {
  const Eigen::MatrixXcd c = x_ * p_ - p_ * x_;
  const int m = dim_ - 1;
  const Eigen::MatrixXcd diff =
      c.topLeftCorner(m, m) - Complex(0.0, 1.0) * Eigen::MatrixXcd::Identity(m, m);
  return diff.cwiseAbs().maxCoeff();
}

FockState coherent_fock(Complex beta, int dim) {
  if (dim < min_fock_dimension(std::abs(beta))) {
    throw Error(ErrorCode::TruncationTooSmall,
                "dimension " + std::to_string(dim) + " too small for |beta| = " +
                    std::to_string(std::abs(beta)));
  }
  FockState s{dim, Eigen::VectorXcd(dim)};
  Complex c = std::exp(-0.5 * std::norm(beta));
  s.amplitudes(0) = c;
  for (int n = 1; n < dim; ++n) {
    c *= beta / std::sqrt(static_cast<double>(n));
    s.amplitudes(n) = c;
  }
  return s;
}

Eigen::MatrixXcd fock_density(const CoherentSuperposition& state, int dim) {
  const std::size_t n = state.size();
  std::vector<Eigen::VectorXcd> kets;
  kets.reserve(n);
  for (std::size_t j = 0; j < n; ++j) kets.push_back(coherent_fock(state.beta(j), dim).amplitudes);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) rho += state.coeff(j, k) * kets[j] * kets[k].adjoint();
  }
  return rho / state.normalization();
}

Complex characteristic_sequential(const CoherentSuperposition& state, CharacteristicPoint cp,
                                  int dim) {
  require_dimension(state, cp, dim);
  const FockOperatorSet ops(dim, state.sigma());
  const Eigen::MatrixXcd ux = ops.exp_ix(0.5 * cp.lambda);
  const Eigen::MatrixXcd up = ops.exp_ip(0.5 * cp.eta);
  const Eigen::MatrixXcd rho = fock_density(state, dim);
  return (ux * up * rho * up * ux).trace();
}

Complex characteristic_displacement(const CoherentSuperposition& state, CharacteristicPoint cp,
                                    int dim) {
  require_dimension(state, cp, dim);
  const FockOperatorSet ops(dim, state.sigma());
  const Eigen::MatrixXcd rho = fock_density(state, dim);
  return (exp_i_hermitian(cp.lambda * ops.x() + cp.eta * ops.p(), 1.0) * rho).trace();
}

}  // namespace wnl
