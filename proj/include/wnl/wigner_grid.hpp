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
#include "wnl/wigner.hpp"

namespace wnl {

// Whole-grid evaluation. Outputs are row-major (x outer, p inner), matching
// PhaseGrid::index. The parallel kernels give bit-identical results for any
// thread count: each row is owned by one thread and pairs are summed in a
// fixed order.

/// Separable OpenMP kernel: W_jk factorizes into a function of x times a
/// function of p, so each pair costs nx + np exponentials.
std::vector<double> wigner_grid(const CoherentSuperposition& state, const PhaseGrid& grid);

/// Reference: wigner_direct at every node, single-threaded.
std::vector<double> wigner_grid_serial(const CoherentSuperposition& state, const PhaseGrid& grid);

/// Unnormalized population and interference parts of N·W on the grid.
struct SplitField {
  std::vector<double> diagonal;
  std::vector<double> coherent;
};
SplitField wigner_grid_split(const CoherentSuperposition& state, const PhaseGrid& grid);

/// Fourier-reconstructed W on the grid, parallel over rows.
std::vector<double> wigner_grid_fourier(const CharacteristicReconstruction& rec,
                                        const PhaseGrid& grid);

/// 2D trapezoid rule over the grid box.
double integrate_trapezoid(const PhaseGrid& grid, std::span<const double> values);

}  // namespace wnl
