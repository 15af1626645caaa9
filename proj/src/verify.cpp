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

#include "wnl/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "wnl/compensated.hpp"
#include "wnl/error.hpp"
#include "wnl/fock_oracle.hpp"
#include "wnl/negativity.hpp"
#include "wnl/wigner_grid.hpp"

namespace wnl {

namespace {

constexpr int kFockDim = 64;

Complex random_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  return std::polar(r, 2.0 * kPi * u(rng));
}

// Runs body(record) and turns a thrown Error into a failed check.
std::vector<CheckResult> guarded(const std::string& suite,
                                 const std::function<void(std::vector<CheckResult>&)>& body) {
  std::vector<CheckResult> out;
  try {
    body(out);
  } catch (const Error& e) {
    out.push_back({suite, std::string("exception: ") + e.what(), 0.0, 0.0, false});
  }
  return out;
}

CheckResult check(std::string suite, std::string name, double error, double tol) {
  return {std::move(suite), std::move(name), error, tol, error <= tol};
}

// ∫∫ W e^{i(λX + ηP)} by the trapezoid rule on the grid.
Complex forward_transform(const PhaseGrid& grid, const std::vector<double>& w,
                          CharacteristicPoint cp) {
  CompensatedSum<Complex> sum;
  for (int i = 0; i < grid.nx(); ++i) {
    const double wx = (i == 0 || i == grid.nx() - 1) ? 0.5 : 1.0;
    for (int j = 0; j < grid.np(); ++j) {
      const double wp = (j == 0 || j == grid.np() - 1) ? 0.5 : 1.0;
      sum += wx * wp * w[grid.index(i, j)] *
             std::polar(1.0, cp.lambda * grid.x(i) + cp.eta * grid.p(j));
    }
  }
  return sum.value() * grid.dx() * grid.dp();
}

}  // namespace

CoherentSuperposition random_state(std::mt19937_64& rng, std::size_t n, double max_beta,
                                   double sigma) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> betas(n);
  for (Complex& b : betas) b = random_in_disk(rng, max_beta);
  std::vector<Complex> a(n * n);
  for (Complex& v : a) v = {g(rng), g(rng)};
  CoeffMatrix rho(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Complex s{};
      for (std::size_t m = 0; m < n; ++m) s += a[j * n + m] * std::conj(a[k * n + m]);
      rho(j, k) = s;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    rho(j, j) = rho(j, j).real();
    for (std::size_t k = j + 1; k < n; ++k) rho(k, j) = std::conj(rho(j, k));
  }
  return {std::move(betas), std::move(rho), sigma};
}

CoherentSuperposition random_mixture(std::mt19937_64& rng, std::size_t max_components,
                                     double max_beta) {
  std::uniform_int_distribution<std::size_t> count(1, max_components);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n = count(rng);
  std::vector<Complex> betas(n);
  std::vector<double> weights(n);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    betas[j] = random_in_disk(rng, max_beta);
    weights[j] = u(rng) + 1e-3;
    total += weights[j];
  }
  for (double& w : weights) w /= total;
  return diagonal_mixture(betas, weights);
}

std::vector<CheckResult> verify_qndm(std::uint64_t seed, CrossWignerKernel kernel) {
  return guarded("qndm", [&](std::vector<CheckResult>& out) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    double split = 0.0;
    double closed = 0.0;
    double link = 0.0;
    for (int draw = 0; draw < 100; ++draw) {
      const CoherentSuperposition state = random_state(rng, 2, 2.0);
      const CharacteristicPoint cp{coord(rng), coord(rng)};
      const Complex seq = characteristic_sequential(state, cp, kFockDim);
      const Complex disp = characteristic_displacement(state, cp, kFockDim);
      const Complex g = quasi_characteristic(state, cp);
      split = std::max(split, std::abs(seq - disp));
      closed = std::max({closed, std::abs(seq - g), std::abs(disp - g)});
      if (draw < 10) {
        const PhaseGrid grid(-10.0, 10.0, -10.0, 10.0, 201, 201);
        std::vector<double> w(grid.size());
        for (int i = 0; i < grid.nx(); ++i) {
          for (int j = 0; j < grid.np(); ++j) {
            w[grid.index(i, j)] = wigner_direct(state, grid.node(i, j), kernel);
          }
        }
        link = std::max(link, std::abs(forward_transform(grid, w, cp) - g));
      }
    }
    out.push_back(check("qndm", "sequential_vs_displacement", split, 1e-10));
    out.push_back(check("qndm", "fock_vs_closed_form", closed, 1e-8));
    out.push_back(check("qndm", "wigner_transform_vs_closed_form", link, 1e-8));
  });
}

std::vector<CheckResult> verify_rescaling(std::uint64_t seed, CrossWignerKernel kernel) {
  return guarded("rescaling", [&](std::vector<CheckResult>& out) {
    std::mt19937_64 rng(seed + 1);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    std::uniform_real_distribution<double> coord(-6.0, 6.0);
    for (double c : {0.5, 2.0}) {
      double err = 0.0;
      std::mt19937_64 draws(rng());
      for (int s = 0; s < 20; ++s) {
        const CoherentSuperposition base = random_state(draws, count(draws), 3.0);
        const CoherentSuperposition scaled(
            std::vector<Complex>(base.betas().begin(), base.betas().end()), base.coeffs(), c);
        for (int q = 0; q < 25; ++q) {
          const PhasePoint pt{coord(draws), coord(draws)};
          const double w1 = wigner_direct(base, pt, kernel);
          const double wc = wigner_direct(scaled, {c * pt.x, pt.p / c}, kernel);
          err = std::max(err, std::abs(w1 - wc));
        }
      }
      out.push_back(check("rescaling", c < 1.0 ? "sigma_0.5" : "sigma_2", err, 1e-10));
    }
  });
}

std::vector<CheckResult> verify_diagonal(std::uint64_t seed, CrossWignerKernel kernel) {
  return guarded("diagonal", [&](std::vector<CheckResult>& out) {
    std::mt19937_64 rng(seed + 2);
    std::uniform_real_distribution<double> coord(-6.0, 6.0);
    double grid_neg = 0.0;
    double refined_neg = 0.0;
    double agreement = 0.0;
    for (int s = 0; s < 50; ++s) {
      const CoherentSuperposition state = random_mixture(rng, 8, 3.0);
      std::vector<WeightedBeta> comps;
      for (std::size_t j = 0; j < state.size(); ++j) {
        comps.push_back({state.beta(j), state.coeff(j, j).real()});
      }
      const MinimizationSpec spec = MinimizationSpec::for_state(state);
      const PhaseGrid grid(spec.box.x_min, spec.box.x_max, spec.box.p_min, spec.box.p_max, 101,
                           101);
      for (int i = 0; i < grid.nx(); ++i) {
        for (int j = 0; j < grid.np(); ++j) {
          grid_neg = std::max(grid_neg, -wigner_diagonal_mixture(comps, grid.node(i, j)));
        }
      }
      refined_neg = std::max(refined_neg, -minimize_wigner(state, spec).value);
      for (int q = 0; q < 25; ++q) {
        const PhasePoint pt{coord(rng), coord(rng)};
        agreement = std::max(agreement, std::abs(wigner_direct(state, pt, kernel) -
                                                 wigner_diagonal_mixture(comps, pt)));
      }
    }
    out.push_back(check("diagonal", "gaussian_sum_grid_min", grid_neg, 0.0));
    out.push_back(check("diagonal", "refined_global_min", refined_neg, 1e-12));
    out.push_back(check("diagonal", "direct_vs_gaussian_sum", agreement, 1e-12));
  });
}

std::vector<CheckResult> verify_paths(std::uint64_t seed, CrossWignerKernel kernel) {
  return guarded("paths", [&](std::vector<CheckResult>& out) {
    std::mt19937_64 rng(seed + 3);
    std::uniform_int_distribution<std::size_t> count(1, 3);
    std::vector<CoherentSuperposition> states;
    for (int s = 0; s < 3; ++s) states.push_back(random_state(rng, count(rng), 2.0));
    double err = 0.0;
    for (const CoherentSuperposition& state : states) {
      const CharacteristicReconstruction rec(state, QuadratureSpec::for_state(state));
      const MinimizationSpec spec = MinimizationSpec::for_state(state);
      const PhaseGrid grid(spec.box.x_min, spec.box.x_max, spec.box.p_min, spec.box.p_max, 21, 21);
      const std::vector<double> fourier = wigner_grid_fourier(rec, grid);
      for (int i = 0; i < grid.nx(); ++i) {
        for (int j = 0; j < grid.np(); ++j) {
          err = std::max(err, std::abs(fourier[grid.index(i, j)] -
                                       wigner_direct(state, grid.node(i, j), kernel)));
        }
      }
    }
    out.push_back(check("paths", "direct_vs_fourier", err, 1e-6));
  });
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const std::vector<std::string>& names =
      options.suites.empty() ? verification_suites() : options.suites;
  std::vector<CheckResult> all;
  for (const std::string& name : names) {
    std::vector<CheckResult> r;
    if (name == "qndm") {
      r = verify_qndm(options.seed, options.kernel);
    } else if (name == "rescaling") {
      r = verify_rescaling(options.seed, options.kernel);
    } else if (name == "diagonal") {
      r = verify_diagonal(options.seed, options.kernel);
    } else if (name == "paths") {
      r = verify_paths(options.seed, options.kernel);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown verification suite '" + name + "'");
    }
    all.insert(all.end(), r.begin(), r.end());
  }
  return all;
}

void print_report(std::ostream& out, const std::vector<CheckResult>& results) {
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-34s %12s %10s  %s\n", "suite", "check", "error",
                "tol", "result");
  out << line;
  for (const CheckResult& r : results) {
    std::snprintf(line, sizeof line, "%-10s %-34s %12.4e %10.1e  %s\n", r.suite.c_str(),
                  r.check.c_str(), r.error, r.tolerance, r.passed ? "PASS" : "FAIL");
    out << line;
  }
  const auto failed = std::count_if(results.begin(), results.end(),
                                    [](const CheckResult& r) { return !r.passed; });
  for (const CheckResult& r : results) {
    if (!r.passed) out << "FAILED invariant: " << r.suite << "/" << r.check << '\n';
  }
  out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << '\n';
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace wnl
