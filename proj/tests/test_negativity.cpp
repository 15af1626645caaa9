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

#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "wnl/cat.hpp"
#include "wnl/negativity.hpp"
#include "wnl/verify.hpp"
#include "wnl/wigner.hpp"

using namespace wnl;
using wnl::testing::code_of;

namespace {

CatParams odd_cat(double re_beta, double delta) {
  return {.theta = kPi / 4, .delta = delta, .phi = kPi, .re_beta = re_beta};
}

}  // namespace

TEST_CASE("spec defaults") {
  const CoherentSuperposition s = cat_state({.re_beta = 2.0});
  const MinimizationSpec spec = MinimizationSpec::for_state(s);
  const double half = kSqrt2 * 2.0 + 5.0;
  CHECK(spec.box.x_min == doctest::Approx(-half));
  CHECK(spec.box.p_max == doctest::Approx(half));
  CHECK(spec.nx >= 101);
  CHECK(spec.nx % 2 == 1);
  const double fringe = kPi / (2 * kSqrt2 * 2.0);
  CHECK(spec.grid().dp() <= fringe / 6 + 1e-12);

  MinimizationSpec bad = spec;
  bad.box.x_max = bad.box.x_min;
  CHECK(code_of([&] { bad.check(); }) == ErrorCode::InvalidArgument);
  bad = spec;
  bad.refine_tol = 0.0;
  CHECK(code_of([&] { bad.check(); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("minimum of positive states") {
  const CoherentSuperposition vac = coherent_state(0.0);
  const MinimumResult r = minimize_wigner(vac, MinimizationSpec::for_state(vac));
  CHECK(r.value >= 0.0);
  CHECK(r.value < 1e-10);
  CHECK(std::hypot(r.argmin.x, r.argmin.p) > 4.0);

  std::mt19937_64 rng(51);
  const CoherentSuperposition mix = random_mixture(rng, 8, 3.0);
  CHECK(minimize_wigner(mix, MinimizationSpec::for_state(mix)).value >= -1e-12);
}

TEST_CASE("minimum of a pure cat") {
  const CatParams c{.theta = kPi / 4, .delta = 1.0, .phi = 0.0, .re_beta = 2.0};
  const CoherentSuperposition s = cat_state(c);
  const MinimumResult r = minimize_wigner(s, MinimizationSpec::for_state(s));
  CHECK(r.value < 0.0);
  CHECK(r.value <= r.coarse_value);
  const PhasePoint predicted = predicted_min_location(c);
  CHECK(std::abs(r.argmin.x) < 1e-4);
  CHECK(std::abs(std::abs(r.argmin.p) - std::abs(predicted.p)) < 1e-4);
  CHECK(r.value == doctest::Approx(cat_wigner_closed(c, predicted)).epsilon(1e-8));
}

TEST_CASE("minimization is deterministic") {
  std::mt19937_64 rng(52);
  const CoherentSuperposition s = random_state(rng, 4, 2.0);
  const MinimizationSpec spec = MinimizationSpec::for_state(s);
  const MinimumResult a = minimize_wigner(s, spec);
  const MinimumResult b = minimize_wigner(s, spec);
  CHECK(a.value == b.value);
  CHECK(a.argmin.x == b.argmin.x);
  CHECK(a.argmin.p == b.argmin.p);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("negative minimum on the boundary") {
  const CoherentSuperposition s = cat_state(odd_cat(2.0, 1.0));
  MinimizationSpec spec = MinimizationSpec::for_state(s);
  spec.box = {0.2, 1.0, -0.3, 0.3};
  CHECK(code_of([&] { minimize_wigner(s, spec); }) == ErrorCode::BoxTooSmall);
}

TEST_CASE("certificates") {
  const CoherentSuperposition mixed = cat_state(odd_cat(2.0, 0.0));
  CHECK_FALSE(certify_negativity(mixed, MinimizationSpec::for_state(mixed)).negative);

  const CoherentSuperposition pure = cat_state({.delta = 1.0, .re_beta = 2.0});
  const Certificate c = certify_negativity(pure, MinimizationSpec::for_state(pure));
  CHECK(c.negative);
  CHECK(c.min < -1e-12);
  CHECK(wigner_direct(pure, c.witness) == doctest::Approx(c.min).epsilon(1e-12));

  const double dc = critical_delta_analytic(1.0);
  const CoherentSuperposition edge = cat_state(odd_cat(1.0, dc));
  CHECK_FALSE(certify_negativity(edge, MinimizationSpec::for_state(edge)).negative);
}

TEST_CASE("critical coherence of cat families") {
  for (double a : {1.0, 0.25}) {
    const CoherentSuperposition s = cat_state(odd_cat(a, 1.0));
    const CriticalCoherenceResult r =
        critical_delta_numeric(s, MinimizationSpec::for_state(s), {.delta_tol = 1e-3});
    CHECK(std::abs(r.delta_c - critical_delta_analytic(a)) <= 1e-3);
    CHECK(r.bracket_width <= 1e-3);
    CHECK(r.lower < r.upper);
    CHECK(r.method == "bisection");
  }
  CHECK(critical_delta_analytic(0.25) == doctest::Approx(0.8825).epsilon(1e-4));
}

TEST_CASE("generic family agrees with the dephasing path") {
  const double a = 0.75;
  const CoherentSuperposition s = cat_state(odd_cat(a, 1.0));
  const MinimizationSpec spec = MinimizationSpec::for_state(s);
  const StateFamily family = [&](double delta) { return cat_state(odd_cat(a, delta)); };
  const CriticalCoherenceResult fast = critical_delta_numeric(s, spec, {.delta_tol = 1e-4});
  const CriticalCoherenceResult slow = critical_delta_numeric(family, spec, {.delta_tol = 1e-4});
  CHECK(std::abs(fast.delta_c - slow.delta_c) <= 1e-4);
  CHECK(std::abs(slow.delta_c - critical_delta_analytic(a)) <= 1e-3);
}

TEST_CASE("logarithmic bisection") {
  const double a = 2.0;
  const CoherentSuperposition s = cat_state(odd_cat(a, 1.0));
  BisectionOptions opt{.delta_tol = 1e-3, .scale = BisectionScale::Logarithmic};
  const CriticalCoherenceResult r = critical_delta_numeric(s, MinimizationSpec::for_state(s), opt);
  CHECK(testing::rel_err(r.delta_c, critical_delta_analytic(a)) <= 2e-3);
  CHECK(r.method == "bisection-log");
}

TEST_CASE("family errors") {
  const CoherentSuperposition vac = coherent_state(0.0);
  const StateFamily flat = [&](double) { return vac; };
  CHECK(code_of([&] { critical_delta_numeric(flat, MinimizationSpec::for_state(vac)); }) ==
        ErrorCode::NoSignChange);

  const CoherentSuperposition neg = cat_state(odd_cat(1.0, 1.0));
  const MinimizationSpec spec = MinimizationSpec::for_state(neg);
  const StateFamily bumpy = [&](double delta) {
    return (delta == 0.5 || delta == 1.0) ? neg : cat_state(odd_cat(1.0, 0.0));
  };
  CHECK(code_of([&] { critical_delta_numeric(bumpy, spec); }) == ErrorCode::NonMonotoneFamily);

  CHECK(code_of([&] { critical_delta_numeric(neg, spec, {.delta_tol = 0.0}); }) ==
        ErrorCode::InvalidArgument);
}
