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
#include "wnl/bessel.hpp"
#include "wnl/circle_cat.hpp"
#include "wnl/negativity.hpp"
#include "wnl/wigner.hpp"

using namespace wnl;
using wnl::testing::code_of;

TEST_CASE("circle state construction") {
  const CoherentSuperposition mixed = circle_state({.m = 4, .d = 1.0, .delta = 0.0});
  REQUIRE(mixed.size() == 4);
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(mixed.coeff(j, j).real() == doctest::Approx(0.25));
    CHECK(std::abs(mixed.beta(j)) == doctest::Approx(1.0));
    for (std::size_t k = 0; k < 4; ++k)
      if (j != k) CHECK(mixed.coeff(j, k) == Complex{});
  }
  const CoherentSuperposition pure = circle_state({.m = 4, .d = 1.0, .delta = 1.0});
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) CHECK(pure.coeff(j, k).real() == doctest::Approx(0.25));

  const CoherentSuperposition big = circle_state({.m = 64, .d = 8.0, .delta = 1.0});
  Complex trace{};
  for (std::size_t j = 0; j < 64; ++j) {
    trace += big.coeff(j, j);
    CHECK(std::abs(big.beta(j)) == doctest::Approx(8.0));
  }
  CHECK(std::abs(trace - 1.0) < 1e-14);

  CHECK(code_of([] { circle_state({.m = 5}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { circle_state({.m = 64, .d = 0.5}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { circle_state({.m = 64, .d = 2, .delta = -0.1}); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("exact polar sum equals the Cartesian sum") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> r(0.0, 4.0);
  std::uniform_real_distribution<double> a(0.0, 2 * kPi);
  std::uniform_real_distribution<double> dl(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const CircleCatParams p{.m = 16, .d = 2.0, .delta = dl(rng)};
    const PolarPoint pt(r(rng), a(rng));
    CHECK(std::abs(circle_wigner_exact(p, pt) - wigner_direct(circle_state(p), pt.cartesian())) <
          1e-10);
  }
  const CircleCatParams big{.m = 64, .d = 8.0, .delta = 1.0};
  const CircleWigner w(big);
  const CoherentSuperposition s = circle_state(big);
  for (double R : {0.0, 0.4, 1.3, 2.5, 6.0, 11.0}) {
    const PolarPoint pt(R, 0.37);
    CHECK(std::abs(w.exact(pt) - wigner_direct(s, pt.cartesian())) < 1e-10);
  }
}

TEST_CASE("exact sum special values") {
  // Without coherence only the diagonal terms survive: e^{-2d^2}/pi at the origin.
  for (double d : {1.0, 2.0, 3.5}) {
    const CircleCatParams p{.m = 8, .d = d, .delta = 0.0};
    CHECK(circle_wigner_exact(p, PolarPoint(0, 0)) ==
          doctest::Approx(std::exp(-2 * d * d) / kPi).epsilon(1e-12));
  }
  CHECK(circle_wigner_exact({.m = 64, .d = 8, .delta = 1}, PolarPoint(0, 0)) > 0.0);
}

TEST_CASE("discrete rotational symmetry") {
  const CircleCatParams p{.m = 16, .d = 3.0, .delta = 0.8};
  for (double R : {0.5, 2.0, 4.1})
    for (double phi : {0.1, 1.0, 2.2}) {
      const double a = circle_wigner_exact(p, PolarPoint(R, phi));
      const double b = circle_wigner_exact(p, PolarPoint(R, phi + 2 * kPi / 16));
      CHECK(std::abs(a - b) < 1e-10);
    }
}

TEST_CASE("angular variation in the packed window") {
  const CircleCatParams p{.m = 64, .d = 2.0, .delta = 1.0};
  const CircleWigner w(p);
  for (double R : {0.2, 0.6, 1.0}) {
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < 32; ++k) {
      const double v = w.exact(PolarPoint(R, k * kPi / 32));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    CHECK(hi - lo <= 0.01 * std::max(std::abs(hi), std::abs(lo)));
  }
}

TEST_CASE("packing series") {
  // log sum_{q>=0} d^{2qM}/(qM)! by direct log-sum-exp.
  auto oracle = [](int m, double d) {
    double top = -1e300;
    std::vector<double> logs;
    for (int q = 0; q < 60; ++q) {
      const double l = 2.0 * q * m * std::log(d) - std::lgamma(q * m + 1.0);
      logs.push_back(l);
      top = std::max(top, l);
    }
    double s = 0.0;
    for (double l : logs) s += std::exp(l - top);
    return top + std::log(s);
  };
  CHECK(log_packing_series(64, 1.0) == doctest::Approx(oracle(64, 1.0)).epsilon(1e-12));
  CHECK(log_packing_series(64, 8.0) == doctest::Approx(oracle(64, 8.0)).epsilon(1e-12));
  CHECK(log_packing_series(16, 3.0) == doctest::Approx(oracle(16, 3.0)).epsilon(1e-12));
}

TEST_CASE("normalization of the circle family") {
  for (double d : {1.0, 3.0, 8.0})
    for (double delta : {0.0, 0.3, 1.0}) {
      const CircleCatParams p{.m = 64, .d = d, .delta = delta};
      const double expect = (1 - delta) + delta * 64 * std::exp(-d * d + log_packing_series(64, d));
      CHECK(CircleWigner(p).normalization() == doctest::Approx(expect).epsilon(1e-10));
      CHECK(CircleWigner(p).normalization() ==
            doctest::Approx(circle_state(p).normalization()).epsilon(1e-10));
    }
}

TEST_CASE("leading order radial profile") {
  const CircleCatParams pure{.m = 64, .d = 8.0, .delta = 1.0};
  const double window = pure.validity_radius();
  CHECK(window == doctest::Approx(64.0 / (2 * kSqrt2 * 8.0)));
  for (int i = 0; i < 200; ++i) {
    const double R = window * i / 200.0;
    const double j0 = bessel_j(0, 2 * kSqrt2 * R * 8.0);
    const double w = circle_wigner_bessel(pure, R);
    if (std::abs(j0) > 1e-12) CHECK((w > 0) == (j0 > 0));
  }
  CHECK(circle_wigner_bessel({.m = 64, .d = 8.0, .delta = 0.0}, 0.0) > 0.0);
  CHECK(code_of([&] { circle_wigner_bessel(pure, window * 1.01); }) ==
        ErrorCode::OutsideValidityWindow);

  // The two forms agree only while r = 2 sqrt2 R d stays small.
  const CircleCatParams packed{.m = 64, .d = 1.5, .delta = 1.0};
  const CircleWigner cw(packed);
  CHECK(cw.bessel(0.0) == doctest::Approx(cw.exact(PolarPoint(0.0, 0.0))).epsilon(1e-12));
  for (double R : {0.005, 0.01, 0.02})
    CHECK(testing::rel_err(cw.bessel(R), cw.exact(PolarPoint(R, 0.0))) < 0.005);
}

TEST_CASE("critical coherence bound") {
  const CircleBound b1 = critical_delta_bound({.m = 64, .d = 1.0});
  CHECK(b1.r_star == doctest::Approx(3.19622).epsilon(1e-5));
  CHECK(b1.ratio == doctest::Approx(-0.056).epsilon(0.01));
  CHECK(b1.delta_bar == doctest::Approx(1.0 / (1.0 + 0.056 * std::exp(1.0) * 64)).epsilon(0.02));
  CHECK(b1.delta_bar == doctest::Approx(0.093).epsilon(0.01));
  CHECK(b1.stationary[0] == doctest::Approx(3.19622).epsilon(1e-5));
  for (std::size_t n = 1; n < 4; ++n) CHECK(std::abs(b1.stationary[n] - (n + 1) * kPi) < 0.2);

  for (int d = 1; d <= 8; ++d) {
    const CircleBound b = critical_delta_bound({.m = 64, .d = double(d)});
    const double formula = 1.0 / (1.0 + 0.056 * std::exp(double(d * d)) * 64);
    CHECK(testing::rel_err(b.delta_bar, formula) < 0.02);
  }
}

TEST_CASE("fully coherent circles are negative in the default box for d >= 4") {
  for (double d : {4.0, 8.0}) {
    const CoherentSuperposition s = circle_state({.m = 64, .d = d, .delta = 1.0});
    const Certificate c = certify_negativity(s, MinimizationSpec::for_state(s));
    CHECK(c.negative);
  }
}
