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

#include "wnl/wigner.hpp"

#include <algorithm>
#include <cmath>

#include "wnl/compensated.hpp"
#include "wnl/error.hpp"

namespace wnl {

namespace {

constexpr double kImagResidualLimit = 1e-8;

PhasePoint center_of(Complex beta, double sigma) noexcept {
  return {kSqrt2 * sigma * beta.real(), kSqrt2 * beta.imag() / sigma};
}

std::vector<double> uniform_nodes(double cutoff, int n) {
  std::vector<double> nodes(static_cast<std::size_t>(n));
  const double h = 2.0 * cutoff / (n - 1);
  for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = -cutoff + i * h;
  return nodes;
}

double trapezoid_weight(int i, int n, double h) noexcept {
  return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

}  // namespace

void QuadratureSpec::check() const {
  if (!(std::isfinite(cutoff) && cutoff > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "quadrature cutoff must be positive");
  }
  if (n_lambda < 16 || n_eta < 16 || n_lambda % 2 != 0 || n_eta % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument, "quadrature sizes must be even and >= 16");
  }
}

QuadratureSpec QuadratureSpec::for_state(const CoherentSuperposition& state) {
  const double b = state.max_abs_beta();
  return {std::max(8.0 * (1.0 + b), kSqrt2 * (2.0 * b + 8.0)), 512, 512};
}

Complex cross_wigner(Complex beta_j, Complex beta_k, PhasePoint pt, double sigma) noexcept {
  const PhasePoint cj = center_of(beta_j, sigma);
  const PhasePoint ck = center_of(beta_k, sigma);
  const double ux = (pt.x - 0.5 * (cj.x + ck.x)) / sigma;
  const double up = (pt.p - 0.5 * (cj.p + ck.p)) * sigma;
  const double phase =
      pt.x * (cj.p - ck.p) - pt.p * (cj.x - ck.x) + 0.5 * (cj.x * ck.p - ck.x * cj.p);
  return std::exp(Complex(-ux * ux - up * up, phase)) / kPi;
}

double wigner_direct(const CoherentSuperposition& state, PhasePoint pt) {
  return wigner_direct(state, pt, &cross_wigner);
}

double wigner_direct(const CoherentSuperposition& state, PhasePoint pt,
                     CrossWignerKernel kernel) {
  CompensatedSum<Complex> sum;
  double magnitude = 0.0;
  const std::size_t n = state.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex term = state.coeff(j, k) * kernel(state.beta(j), state.beta(k), pt,
                                                      state.sigma());
      sum += term;
      magnitude += std::abs(term);
    }
  }
  const Complex total = sum.value();
  if (std::abs(total.imag()) > kImagResidualLimit * std::max(1.0, magnitude)) {
    throw Error(ErrorCode::NonHermitianAccumulation,
                "imaginary residual " + std::to_string(total.imag()));
  }
  return total.real() / state.normalization();
}

Complex quasi_characteristic(const CoherentSuperposition& state, CharacteristicPoint cp) {
  const double s = state.sigma();
  const Complex alpha = Complex(-cp.eta / s, cp.lambda * s) / kSqrt2;
  const double gauss = -0.5 * std::norm(alpha);
  CompensatedSum<Complex> sum;
  const std::size_t n = state.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Complex bj = state.beta(j);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex bk = state.beta(k);
      const Complex expo = gauss - std::conj(alpha) * bj + alpha * std::conj(bk) -
                           0.5 * (std::norm(bj) + std::norm(bk)) + bj * std::conj(bk);
      sum += state.coeff(j, k) * std::exp(expo);
    }
  }
  return sum.value() / state.normalization();
}

CharacteristicReconstruction::CharacteristicReconstruction(const CoherentSuperposition& state,
                                                           const QuadratureSpec& quad)
    : quad_(quad), sigma_(state.sigma()) {
  quad_.check();
  const int nl = quad_.n_lambda;
  const int ne = quad_.n_eta;
  lambda_ = uniform_nodes(quad_.cutoff, nl);
  eta_ = uniform_nodes(quad_.cutoff, ne);

  // In σ = 1 variables G_jk(λ, η) = c_jk e^{-(λ²+η²)/4 + iλu + ηv} with
  // u = (β_j + β_k*)/√2, v = (β_j - β_k*)/√2. Both one-dimensional factors
  // are shifted to peak at modulus one and the shift moves into c_jk.
  const std::size_t n = state.size();
  const std::size_t n_pairs = n * n;
  std::vector<Complex> coeff(n_pairs);
  std::vector<Complex> a_tab(n_pairs * static_cast<std::size_t>(nl));
  std::vector<Complex> b_tab(n_pairs * static_cast<std::size_t>(ne));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t q = j * n + k;
      const Complex bj = state.beta(j);
      const Complex bk = state.beta(k);
      const Complex u = (bj + std::conj(bk)) / kSqrt2;
      const Complex v = (bj - std::conj(bk)) / kSqrt2;
      const double shift_a = u.imag() * u.imag();
      const double shift_b = v.real() * v.real();
      const Complex log_overlap = -0.5 * (std::norm(bj) + std::norm(bk)) + bj * std::conj(bk);
      coeff[q] = state.coeff(j, k) * std::exp(log_overlap + shift_a + shift_b) /
                 state.normalization();
      for (int i = 0; i < nl; ++i) {
        const double l = lambda_[static_cast<std::size_t>(i)];
        a_tab[q * nl + i] = std::exp(Complex(-0.25 * l * l - shift_a, 0.0) + Complex(0.0, l) * u);
      }
      for (int i = 0; i < ne; ++i) {
        const double e = eta_[static_cast<std::size_t>(i)];
        b_tab[q * ne + i] = std::exp(Complex(-0.25 * e * e - shift_b, 0.0) + e * v);
      }
    }
  }

  const double hl = 2.0 * quad_.cutoff / (nl - 1);
  const double he = 2.0 * quad_.cutoff / (ne - 1);
  weighted_g_.assign(static_cast<std::size_t>(nl) * ne, Complex{});
  std::vector<double> edge(static_cast<std::size_t>(nl), 0.0);

#pragma omp parallel for schedule(static)
  for (int i = 0; i < nl; ++i) {
    std::vector<Complex> row(static_cast<std::size_t>(ne), Complex{});
    for (std::size_t q = 0; q < n_pairs; ++q) {
      const Complex a = coeff[q] * a_tab[q * nl + i];
      const Complex* b = &b_tab[q * ne];
      for (int e = 0; e < ne; ++e) row[static_cast<std::size_t>(e)] += a * b[e];
    }
    double edge_max = 0.0;
    const bool edge_row = i == 0 || i == nl - 1;
    const double wl = trapezoid_weight(i, nl, hl) / (4.0 * kPi * kPi);
    for (int e = 0; e < ne; ++e) {
      const Complex g = row[static_cast<std::size_t>(e)];
      if (edge_row || e == 0 || e == ne - 1) edge_max = std::max(edge_max, std::abs(g));
      weighted_g_[static_cast<std::size_t>(i) * ne + e] = g * (wl * trapezoid_weight(e, ne, he));
    }
    edge[static_cast<std::size_t>(i)] = edge_max;
  }
  boundary_max_ = *std::max_element(edge.begin(), edge.end());
  if (boundary_max_ > kBoundaryCharacteristicTolerance) {
    throw Error(ErrorCode::CutoffTooSmall,
                "|G| = " + std::to_string(boundary_max_) + " on the quadrature boundary");
  }
}

double CharacteristicReconstruction::operator()(PhasePoint pt) const {
  const double x = pt.x / sigma_;
  const double p = pt.p * sigma_;
  const int nl = quad_.n_lambda;
  const int ne = quad_.n_eta;
  std::vector<Complex> phase_p(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) phase_p[static_cast<std::size_t>(e)] = std::polar(1.0, -eta_[static_cast<std::size_t>(e)] * p);
  Complex total{};
  for (int i = 0; i < nl; ++i) {
    const Complex* g = &weighted_g_[static_cast<std::size_t>(i) * ne];
    Complex s{};
    for (int e = 0; e < ne; ++e) s += g[e] * phase_p[static_cast<std::size_t>(e)];
    total += std::polar(1.0, -lambda_[static_cast<std::size_t>(i)] * x) * s;
  }
  return total.real();
}

double wigner_from_characteristic(const CoherentSuperposition& state, PhasePoint pt,
                                  const QuadratureSpec& quad) {
  return CharacteristicReconstruction(state, quad)(pt);
}

double wigner_diagonal_mixture(std::span<const WeightedBeta> components, PhasePoint pt,
                               double sigma) {
  if (components.empty()) throw Error(ErrorCode::InvalidArgument, "empty mixture");
  CompensatedSum<double> total_weight;
  for (const WeightedBeta& c : components) {
    if (c.weight < 0.0) throw Error(ErrorCode::NegativeWeight, "mixture weight below zero");
    total_weight += c.weight;
  }
  if (std::abs(total_weight.value() - 1.0) > 1e-12) {
    throw Error(ErrorCode::InvalidArgument, "mixture weights must sum to one");
  }
  CompensatedSum<double> sum;
  for (const WeightedBeta& c : components) {
    const PhasePoint ctr = center_of(c.beta, sigma);
    const double ux = (pt.x - ctr.x) / sigma;
    const double up = (pt.p - ctr.p) * sigma;
    sum += c.weight * std::exp(-ux * ux - up * up);
  }
  return sum.value() / kPi;
}

WignerEvaluator::WignerEvaluator(const CoherentSuperposition& state)
    : sigma_(state.sigma()), norm_(state.normalization()), diag_norm_(0.0) {
  const std::size_t n = state.size();
  pairs_.reserve(n * (n + 1) / 2);
  for (std::size_t j = 0; j < n; ++j) {
    diag_norm_ += state.coeff(j, j).real();
    const PhasePoint cj = state.center(j);
    for (std::size_t k = j; k < n; ++k) {
      const PhasePoint ck = state.center(k);
      const bool diag = j == k;
      const Complex c = (diag ? 1.0 : 2.0) * state.coeff(j, k) *
                        std::polar(1.0, 0.5 * (cj.x * ck.p - ck.x * cj.p)) / kPi;
      if (c == Complex{}) continue;
      pairs_.push_back({0.5 * (cj.x + ck.x), 0.5 * (cj.p + ck.p), cj.x - ck.x, cj.p - ck.p, c,
                        diag});
    }
  }
}

WignerTerms WignerEvaluator::terms(PhasePoint pt) const {
  CompensatedSum<double> diag;
  CompensatedSum<double> coh;
  double coherent_magnitude = 0.0;
  for (const Pair& q : pairs_) {
    const double ux = (pt.x - q.x_mid) / sigma_;
    const double up = (pt.p - q.p_mid) * sigma_;
    const double g = std::exp(-ux * ux - up * up);
    if (q.diagonal) {
      const double t = g * q.coeff.real();
      diag += t;
    } else {
      const double phase = pt.x * q.dp - pt.p * q.dx;
      const double t = g * (q.coeff.real() * std::cos(phase) - q.coeff.imag() * std::sin(phase));
      coh += t;
      coherent_magnitude += g * std::abs(q.coeff);
    }
  }
  return {diag.value(), coh.value(), coherent_magnitude};
}

double WignerEvaluator::operator()(PhasePoint pt) const {
  const WignerTerms t = terms(pt);
  return (t.diagonal + t.coherent) / norm_;
}

}  // namespace wnl
