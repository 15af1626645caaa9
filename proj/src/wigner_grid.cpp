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

#include "wnl/wigner_grid.hpp"

#include <algorithm>
#include <cmath>

#include "wnl/compensated.hpp"
#include "wnl/error.hpp"

namespace wnl {

namespace {

struct PairTerm {
  Complex coeff;  // weight · ρ_jk · e^{i(X_j P_k - X_k P_j)/2} / (π · scale)
  double x_mid, p_mid, dx, dp;
};

enum class Part { All, Diagonal, Coherent };

std::vector<PairTerm> collect_pairs(const CoherentSuperposition& state, Part part, double scale) {
  std::vector<PairTerm> pairs;
  const std::size_t n = state.size();
  for (std::size_t j = 0; j < n; ++j) {
    const PhasePoint cj = state.center(j);
    for (std::size_t k = j; k < n; ++k) {
      const bool diag = j == k;
      if ((part == Part::Diagonal && !diag) || (part == Part::Coherent && diag)) continue;
      const PhasePoint ck = state.center(k);
      const Complex c = (diag ? 1.0 : 2.0) * state.coeff(j, k) *
                        std::polar(1.0, 0.5 * (cj.x * ck.p - ck.x * cj.p)) / (kPi * scale);
      if (c == Complex{}) continue;
      pairs.push_back({c, 0.5 * (cj.x + ck.x), 0.5 * (cj.p + ck.p), cj.x - ck.x, cj.p - ck.p});
    }
  }
  return pairs;
}

// Re Σ_pairs c · A(x) · B(p) with A(x) = e^{-(x-X̄)²/σ² + i x ΔP} and
// B(p) = e^{-σ²(p-P̄)² - i p ΔX}, processed in blocks of pairs so the B
// table of a block stays cache resident while every row streams over it.
std::vector<double> accumulate(const std::vector<PairTerm>& pairs, const PhaseGrid& grid,
                               double sigma) {
  constexpr std::size_t kBlock = 128;
  const int nx = grid.nx();
  const int np = grid.np();
  std::vector<double> out(grid.size(), 0.0);
  std::vector<double> b_re(kBlock * np);
  std::vector<double> b_im(kBlock * np);
  std::vector<Complex> ca(kBlock * nx);

  for (std::size_t first = 0; first < pairs.size(); first += kBlock) {
    const std::size_t count = std::min(kBlock, pairs.size() - first);
    const int count_i = static_cast<int>(count);

#pragma omp parallel for schedule(static)
    for (int q = 0; q < count_i; ++q) {
      const PairTerm& t = pairs[first + static_cast<std::size_t>(q)];
      for (int j = 0; j < np; ++j) {
        const double p = grid.p(j);
        const double u = (p - t.p_mid) * sigma;
        const Complex b = std::exp(Complex(-u * u, -p * t.dx));
        b_re[static_cast<std::size_t>(q) * np + j] = b.real();
        b_im[static_cast<std::size_t>(q) * np + j] = b.imag();
      }
      for (int i = 0; i < nx; ++i) {
        const double x = grid.x(i);
        const double u = (x - t.x_mid) / sigma;
        ca[static_cast<std::size_t>(q) * nx + i] = t.coeff * std::exp(Complex(-u * u, x * t.dp));
      }
    }

#pragma omp parallel for schedule(static)
    for (int i = 0; i < nx; ++i) {
      double* row = &out[grid.index(i, 0)];
      for (std::size_t q = 0; q < count; ++q) {
        const Complex a = ca[q * nx + static_cast<std::size_t>(i)];
        if (a == Complex{}) continue;
        const double ar = a.real();
        const double ai = a.imag();
        const double* br = &b_re[q * np];
        const double* bi = &b_im[q * np];
        for (int j = 0; j < np; ++j) row[j] += ar * br[j] - ai * bi[j];
      }
    }
  }
  return out;
}

}  // namespace

std::vector<double> wigner_grid(const CoherentSuperposition& state, const PhaseGrid& grid) {
  return accumulate(collect_pairs(state, Part::All, state.normalization()), grid, state.sigma());
}

std::vector<double> wigner_grid_serial(const CoherentSuperposition& state,
                                       const PhaseGrid& grid) {
  std::vector<double> out(grid.size());
  for (int i = 0; i < grid.nx(); ++i) {
    for (int j = 0; j < grid.np(); ++j) out[grid.index(i, j)] = wigner_direct(state, grid.node(i, j));
  }
  return out;
}

SplitField wigner_grid_split(const CoherentSuperposition& state, const PhaseGrid& grid) {
  return {accumulate(collect_pairs(state, Part::Diagonal, 1.0), grid, state.sigma()),
          accumulate(collect_pairs(state, Part::Coherent, 1.0), grid, state.sigma())};
}

std::vector<double> wigner_grid_fourier(const CharacteristicReconstruction& rec,
                                        const PhaseGrid& grid) {
  std::vector<double> out(grid.size());
  const int nx = grid.nx();
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < grid.np(); ++j) out[grid.index(i, j)] = rec(grid.node(i, j));
  }
  return out;
}

double integrate_trapezoid(const PhaseGrid& grid, std::span<const double> values) {
  if (values.size() != grid.size()) {
    throw Error(ErrorCode::InvalidArgument, "values do not match the grid size");
  }
  CompensatedSum<double> sum;
  for (int i = 0; i < grid.nx(); ++i) {
    const double wx = (i == 0 || i == grid.nx() - 1) ? 0.5 : 1.0;
    for (int j = 0; j < grid.np(); ++j) {
      const double wp = (j == 0 || j == grid.np() - 1) ? 0.5 : 1.0;
      sum += wx * wp * values[grid.index(i, j)];
    }
  }
  return sum.value() * grid.dx() * grid.dp();
}

}  // namespace wnl
