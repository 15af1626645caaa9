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

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "wnl/phase_core.hpp"
#include "wnl/wigner.hpp"

namespace wnl {

struct CheckResult {
  std::string suite;
  std::string check;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Kernel used wherever a suite evaluates W directly.
  CrossWignerKernel kernel = &cross_wigner;
  /// Subset of {"qndm", "rescaling", "diagonal", "paths"}; empty runs all.
  std::vector<std::string> suites;
};

inline const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names{"qndm", "rescaling", "diagonal", "paths"};
  return names;
}

/// Random superposition with n components, |β| <= max_beta and a positive
/// semidefinite coefficient matrix A A†.
CoherentSuperposition random_state(std::mt19937_64& rng, std::size_t n, double max_beta,
                                   double sigma = 1.0);

/// Random incoherent mixture with up to max_components components.
CoherentSuperposition random_mixture(std::mt19937_64& rng, std::size_t max_components,
                                     double max_beta);

std::vector<CheckResult> verify_qndm(std::uint64_t seed, CrossWignerKernel kernel);
std::vector<CheckResult> verify_rescaling(std::uint64_t seed, CrossWignerKernel kernel);
std::vector<CheckResult> verify_diagonal(std::uint64_t seed, CrossWignerKernel kernel);
std::vector<CheckResult> verify_paths(std::uint64_t seed, CrossWignerKernel kernel);

/// Throws InvalidArgument for an unknown suite name.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Fixed-width table, one line per check, then a summary line.
void print_report(std::ostream& out, const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace wnl
