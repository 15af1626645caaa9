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

#include "wnl/phase_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "wnl/compensated.hpp"
#include "wnl/error.hpp"

namespace wnl {

namespace {

bool finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

bool PhasePoint::finite() const noexcept { return std::isfinite(x) && std::isfinite(p); }

PolarPoint::PolarPoint(double r, double phi) {
  if (!std::isfinite(r) || !std::isfinite(phi)) {
    throw Error(ErrorCode::NonFinite, "polar point must be finite");
  }
  if (r < 0.0) throw Error(ErrorCode::InvalidArgument, "polar radius must be >= 0");
  r_ = r;
  phi_ = std::fmod(phi, 2.0 * kPi);
  if (phi_ < 0.0) phi_ += 2.0 * kPi;
  if (phi_ >= 2.0 * kPi) phi_ = 0.0;
}

PhasePoint PolarPoint::cartesian() const noexcept {
  return {r_ * std::cos(phi_), r_ * std::sin(phi_)};
}

PhaseGrid::PhaseGrid(double x_min, double x_max, double p_min, double p_max, int nx, int np)
    : x_min_(x_min), x_max_(x_max), p_min_(p_min), p_max_(p_max), nx_(nx), np_(np) {
  for (double v : {x_min, x_max, p_min, p_max}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "grid bounds must be finite");
  }
  if (!(x_min < x_max) || !(p_min < p_max)) {
    throw Error(ErrorCode::InvalidArgument, "grid box is degenerate");
  }
  if (nx < 2 || np < 2) throw Error(ErrorCode::InvalidArgument, "grid needs nx, np >= 2");
}

CoeffMatrix::CoeffMatrix(std::size_t n, std::vector<Complex> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "coefficient matrix is not square");
  }
}

bool ValidationReport::clean() const noexcept {
  return !(non_finite || empty || shape_mismatch || bad_sigma || hermiticity_violation ||
           negative_diagonal || non_positive_norm || complex_norm);
}

std::string ValidationReport::describe() const {
  std::ostringstream out;
  auto flag = [&out](bool set, const char* name) {
    if (!set) return;
    if (out.tellp() > 0) out << ' ';
    out << name;
  };
  flag(non_finite, "NonFinite");
  flag(empty, "Empty");
  flag(shape_mismatch, "ShapeMismatch");
  flag(bad_sigma, "BadSigma");
  flag(hermiticity_violation, "HermiticityViolation");
  flag(negative_diagonal, "NegativeDiagonal");
  flag(non_positive_norm, "NonPositiveNorm");
  flag(complex_norm, "ComplexNorm");
  return out.str();
}

Complex coherent_overlap(Complex beta_j, Complex beta_k) noexcept {
  return std::exp(-0.5 * (std::norm(beta_j) + std::norm(beta_k)) + beta_j * std::conj(beta_k));
}

Complex normalization_sum(std::span<const Complex> betas, const CoeffMatrix& coeffs) {
  CompensatedSum<Complex> sum;
  const std::size_t n = betas.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      sum += coeffs(j, k) * coherent_overlap(betas[j], betas[k]);
    }
  }
  return sum.value();
}

ValidationReport validate(std::span<const Complex> betas, const CoeffMatrix& coeffs,
                          double sigma) {
  ValidationReport r;
  const std::size_t n = betas.size();
  r.empty = n == 0;
  r.shape_mismatch = coeffs.size() != n;
  r.bad_sigma = !(std::isfinite(sigma) && sigma > 0.0);
  r.non_finite = std::any_of(betas.begin(), betas.end(), [](Complex b) { return !finite(b); }) ||
                 std::any_of(coeffs.data().begin(), coeffs.data().end(),
                             [](Complex c) { return !finite(c); });
  if (r.empty || r.shape_mismatch || r.non_finite) return r;

  r.min_diagonal = coeffs(0, 0).real();
  for (std::size_t j = 0; j < n; ++j) {
    const Complex d = coeffs(j, j);
    r.min_diagonal = std::min(r.min_diagonal, d.real());
    r.hermiticity_residual = std::max(r.hermiticity_residual, std::abs(d.imag()));
    for (std::size_t k = j + 1; k < n; ++k) {
      r.hermiticity_residual =
          std::max(r.hermiticity_residual, std::abs(coeffs(j, k) - std::conj(coeffs(k, j))));
    }
  }
  r.hermiticity_violation = r.hermiticity_residual > kHermiticityTolerance;
  r.negative_diagonal = r.min_diagonal < 0.0;

  r.normalization = normalization_sum(betas, coeffs);
  r.non_positive_norm = !(r.normalization.real() > kMinNormalization);
  r.complex_norm = std::abs(r.normalization.imag()) > 1e-10 * std::abs(r.normalization);
  return r;
}

ValidationReport validate(const CoherentSuperposition& state) {
  return validate(state.betas(), state.coeffs(), state.sigma());
}

CoherentSuperposition::CoherentSuperposition(std::vector<Complex> betas, CoeffMatrix coeffs,
                                             double sigma)
    : betas_(std::move(betas)), coeffs_(std::move(coeffs)), sigma_(sigma), norm_(0.0) {
  const ValidationReport r = validate(betas_, coeffs_, sigma_);
  if (!r.clean()) {
    ErrorCode code = ErrorCode::InvalidArgument;
    if (r.non_finite) {
      code = ErrorCode::NonFinite;
    } else if (r.hermiticity_violation) {
      code = ErrorCode::HermiticityViolation;
    } else if (r.negative_diagonal) {
      code = ErrorCode::NegativeDiagonal;
    } else if (r.non_positive_norm || r.complex_norm) {
      code = ErrorCode::NonPositiveNorm;
    }
    throw Error(code, "invalid coherent superposition: " + r.describe());
  }
  norm_ = r.normalization.real();
}

double CoherentSuperposition::max_abs_beta() const noexcept {
  double m = 0.0;
  for (Complex b : betas_) m = std::max(m, std::abs(b));
  return m;
}

PhasePoint CoherentSuperposition::center(std::size_t j) const noexcept {
  return {kSqrt2 * sigma_ * betas_[j].real(), kSqrt2 * betas_[j].imag() / sigma_};
}

double normalization(const CoherentSuperposition& state) {
  const double n = normalization_sum(state.betas(), state.coeffs()).real();
  if (!(n > kMinNormalization)) {
    throw Error(ErrorCode::NonPositiveNorm, "normalization is not positive");
  }
  return n;
}

CoherentSuperposition dephase(const CoherentSuperposition& state, double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "residual coherence must lie in [0, 1]");
  }
  const std::size_t n = state.size();
  CoeffMatrix c(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      c(j, k) = j == k ? state.coeff(j, k) : delta * state.coeff(j, k);
    }
  }
  return {std::vector<Complex>(state.betas().begin(), state.betas().end()), std::move(c),
          state.sigma()};
}

CoherentSuperposition coherent_state(Complex beta, double sigma) {
  CoeffMatrix c(1);
  c(0, 0) = 1.0;
  return {{beta}, std::move(c), sigma};
}

CoherentSuperposition diagonal_mixture(std::span<const Complex> betas,
                                       std::span<const double> weights, double sigma) {
  if (betas.size() != weights.size()) {
    throw Error(ErrorCode::InvalidArgument, "betas and weights differ in length");
  }
  CoeffMatrix c(betas.size());
  for (std::size_t j = 0; j < betas.size(); ++j) {
    if (weights[j] < 0.0) throw Error(ErrorCode::NegativeWeight, "mixture weight below zero");
    c(j, j) = weights[j];
  }
  return {std::vector<Complex>(betas.begin(), betas.end()), std::move(c), sigma};
}

}  // namespace wnl
