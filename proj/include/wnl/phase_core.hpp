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

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace wnl {

using Complex = std::complex<double>;

/// Amplitudes (coherent labels β, coefficients ρ_jk) are plain complex
/// doubles; finiteness is enforced where they enter a state.
using ComplexAmplitude = Complex;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrt2 = std::numbers::sqrt2;

/// A point (X, P) of phase space. X is a length, P an inverse length.
struct PhasePoint {
  double x = 0.0;
  double p = 0.0;

  bool finite() const noexcept;
};

/// Polar coordinates (R, φ) with R >= 0 and φ wrapped into [0, 2π).
class PolarPoint {
 public:
  PolarPoint() = default;
  PolarPoint(double r, double phi);

  double r() const noexcept { return r_; }
  double phi() const noexcept { return phi_; }
  PhasePoint cartesian() const noexcept;

 private:
  double r_ = 0.0;
  double phi_ = 0.0;
};

/// Uniform rectangular grid, nodes include both end points.
class PhaseGrid {
 public:
  PhaseGrid(double x_min, double x_max, double p_min, double p_max, int nx, int np);

  int nx() const noexcept { return nx_; }
  int np() const noexcept { return np_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(nx_) * np_; }
  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  double p_min() const noexcept { return p_min_; }
  double p_max() const noexcept { return p_max_; }
  double dx() const noexcept { return (x_max_ - x_min_) / (nx_ - 1); }
  double dp() const noexcept { return (p_max_ - p_min_) / (np_ - 1); }
  double x(int i) const noexcept { return x_min_ + i * dx(); }
  double p(int j) const noexcept { return p_min_ + j * dp(); }
  PhasePoint node(int i, int j) const noexcept { return {x(i), p(j)}; }
  /// Row-major index, x outer, p inner.
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * np_ + j;
  }

 private:
  double x_min_, x_max_, p_min_, p_max_;
  int nx_, np_;
};

/// Square complex matrix, row-major.
class CoeffMatrix {
 public:
  CoeffMatrix() = default;
  explicit CoeffMatrix(std::size_t n) : n_(n), data_(n * n) {}
  CoeffMatrix(std::size_t n, std::vector<Complex> row_major);

  std::size_t size() const noexcept { return n_; }
  Complex& operator()(std::size_t j, std::size_t k) noexcept { return data_[j * n_ + k]; }
  const Complex& operator()(std::size_t j, std::size_t k) const noexcept {
    return data_[j * n_ + k];
  }
  std::span<const Complex> data() const noexcept { return data_; }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

struct ValidationReport {
  bool non_finite = false;
  bool empty = false;
  bool shape_mismatch = false;
  bool bad_sigma = false;
  bool hermiticity_violation = false;
  bool negative_diagonal = false;
  bool non_positive_norm = false;
  bool complex_norm = false;
  double hermiticity_residual = 0.0;
  double min_diagonal = 0.0;
  Complex normalization{0.0, 0.0};

  bool clean() const noexcept;
  /// Space-separated list of the raised flags, empty when clean.
  std::string describe() const;
};

inline constexpr double kHermiticityTolerance = 1e-12;
inline constexpr double kMinNormalization = 1e-14;

/// Finite mixture/superposition ρ = N⁻¹ Σ_jk ρ_jk |β_j⟩⟨β_k| of coherent
/// states sharing one length scale σ. Immutable; the constructor validates
/// and throws wnl::Error when the report is not clean.
class CoherentSuperposition {
 public:
  CoherentSuperposition(std::vector<Complex> betas, CoeffMatrix coeffs, double sigma = 1.0);

  std::size_t size() const noexcept { return betas_.size(); }
  double sigma() const noexcept { return sigma_; }
  std::span<const Complex> betas() const noexcept { return betas_; }
  Complex beta(std::size_t j) const noexcept { return betas_[j]; }
  const CoeffMatrix& coeffs() const noexcept { return coeffs_; }
  Complex coeff(std::size_t j, std::size_t k) const noexcept { return coeffs_(j, k); }
  /// Re N, computed at construction.
  double normalization() const noexcept { return norm_; }
  double max_abs_beta() const noexcept;
  /// Phase-space center (√2σ Re β, √2 Im β / σ) of component j.
  PhasePoint center(std::size_t j) const noexcept;

 private:
  std::vector<Complex> betas_;
  CoeffMatrix coeffs_;
  double sigma_;
  double norm_;
};

/// ⟨β_k|β_j⟩ = exp(−(|β_j|² + |β_k|²)/2 + β_j β_k*).
Complex coherent_overlap(Complex beta_j, Complex beta_k) noexcept;

/// Σ_jk ρ_jk ⟨β_k|β_j⟩ with compensated accumulation; complex so callers
/// can inspect the imaginary residual.
Complex normalization_sum(std::span<const Complex> betas, const CoeffMatrix& coeffs);

/// Re N of a state; throws NonPositiveNorm below kMinNormalization.
double normalization(const CoherentSuperposition& state);

ValidationReport validate(std::span<const Complex> betas, const CoeffMatrix& coeffs,
                          double sigma);
ValidationReport validate(const CoherentSuperposition& state);

/// Same components with every off-diagonal coefficient multiplied by
/// delta (residual coherence); delta = 0 gives the incoherent mixture.
CoherentSuperposition dephase(const CoherentSuperposition& state, double delta);

/// Single coherent state |β⟩⟨β|.
CoherentSuperposition coherent_state(Complex beta, double sigma = 1.0);

/// Incoherent mixture Σ w_i |β_i⟩⟨β_i|.
CoherentSuperposition diagonal_mixture(std::span<const Complex> betas,
                                       std::span<const double> weights, double sigma = 1.0);

}  // namespace wnl
