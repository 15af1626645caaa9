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
#include "wnl/fock_oracle.hpp"
#include "wnl/verify.hpp"
#include "wnl/wigner.hpp"

using namespace wnl;
using wnl::testing::code_of;

TEST_CASE("operator matrices") {
  const FockOperatorSet ops(32);
  CHECK(ops.a()(0, 1) == Complex(1.0, 0.0));
  CHECK(std::abs(ops.a()(4, 5) - std::sqrt(5.0)) < 1e-15);
  CHECK(ops.a()(1, 0) == Complex(0.0, 0.0));
  CHECK((ops.a_dag() - ops.a().adjoint()).norm() < 1e-15);
  const Eigen::MatrixXcd x = (ops.a_dag() + ops.a()) / kSqrt2;
  const Eigen::MatrixXcd p = Complex(0, 1) * (ops.a_dag() - ops.a()) / kSqrt2;
  CHECK((ops.x() - x).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((ops.p() - p).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(ops.commutator_residual() < 1e-10);
  CHECK(code_of([] { FockOperatorSet(4); }) == ErrorCode::TruncationTooSmall);
}

TEST_CASE("exponentials are unitary and compose") {
  const FockOperatorSet ops(24);
  const Eigen::MatrixXcd u = ops.exp_ix(0.7);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(24, 24);
  CHECK((u * u.adjoint() - id).norm() < 1e-12);
  CHECK((ops.exp_ip(0.3) * ops.exp_ip(0.4) - ops.exp_ip(0.7)).norm() < 1e-12);
  CHECK((exp_i_hermitian(ops.x(), 0.7) - u).norm() < 1e-12);
}

TEST_CASE("coherent expansion") {
  const FockState vac = coherent_fock(0.0, 16);
  CHECK(vac.amplitudes(0) == Complex(1.0, 0.0));
  CHECK(vac.amplitudes.tail(15).norm() == 0.0);

  const Complex b{1.2, -0.7};
  const FockState s = coherent_fock(b, 64);
  CHECK(std::abs(s.norm_deficit()) < 1e-10);
  CHECK(std::abs(s.amplitudes.squaredNorm() - 1.0) < 1e-10);

  const FockState plus = coherent_fock(2.0, 64);
  const FockState minus = coherent_fock(-2.0, 64);
  CHECK(std::abs(plus.amplitudes.dot(minus.amplitudes) - std::exp(-8.0)) < 1e-10);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 20; ++i) {
    const Complex bj{u(rng), u(rng)};
    const Complex bk{u(rng), u(rng)};
    // Eigen's dot conjugates the first argument: <bk|bj>.
    const Complex ov = coherent_fock(bk, 64).amplitudes.dot(coherent_fock(bj, 64).amplitudes);
    CHECK(std::abs(ov - coherent_overlap(bj, bk)) < 1e-10);
  }

  CHECK(min_fock_dimension(2.0) == static_cast<int>(std::ceil(4.0 + 8.0 * std::sqrt(5.0))));
  CHECK(code_of([] { coherent_fock(3.0, 16); }) == ErrorCode::TruncationTooSmall);
}

TEST_CASE("density matrix trace equals one") {
  std::mt19937_64 rng(6);
  const CoherentSuperposition s = random_state(rng, 3, 1.5);
  const Eigen::MatrixXcd rho = fock_density(s, 48);
  CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
  CHECK((rho - rho.adjoint()).norm() < 1e-13);
}

TEST_CASE("characteristic paths examples") {
  const CoherentSuperposition vac = coherent_state(0.0);
  CHECK(std::abs(characteristic_sequential(vac, {0, 0}, 64) - 1.0) < 1e-12);
  CHECK(std::abs(characteristic_displacement(vac, {0, 0}, 64) - 1.0) < 1e-12);
  CHECK(std::abs(characteristic_sequential(vac, {1, 1}, 64) - std::exp(-0.5)) < 1e-8);
  CHECK(std::abs(characteristic_displacement(vac, {2, 0}, 64) - std::exp(-1.0)) < 1e-8);
}

TEST_CASE("characteristic paths agree with the closed form") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> lam(-4.0, 4.0);
  double split = 0.0;
  double closed = 0.0;
  for (int i = 0; i < 25; ++i) {
    const CoherentSuperposition s = random_state(rng, 2, 2.0);
    const CharacteristicPoint cp{lam(rng), lam(rng)};
    const Complex seq = characteristic_sequential(s, cp, 64);
    const Complex dis = characteristic_displacement(s, cp, 64);
    split = std::max(split, std::abs(seq - dis));
    closed = std::max(closed, std::abs(seq - quasi_characteristic(s, cp)));
  }
  CHECK(split <= 1e-10);
  CHECK(closed <= 1e-8);
}

TEST_CASE("characteristic paths with sigma") {
  CatParams p{.theta = 0.9, .delta = 0.8, .phi = 1.1, .re_beta = 1.0};
  const CoherentSuperposition base = cat_state(p);
  const CoherentSuperposition s(std::vector<Complex>(base.betas().begin(), base.betas().end()),
                                base.coeffs(), 1.6);
  const CharacteristicPoint cp{0.8, -1.3};
  CHECK(std::abs(characteristic_displacement(s, cp, 64) - quasi_characteristic(s, cp)) < 1e-8);
}

TEST_CASE("undersized truncation is rejected") {
  const CoherentSuperposition s = coherent_state(2.0);
  CHECK(code_of([&] { characteristic_sequential(s, {4, 4}, 16); }) ==
        ErrorCode::TruncationTooSmall);
  CHECK(code_of([&] { characteristic_displacement(s, {4, 4}, 16); }) ==
        ErrorCode::TruncationTooSmall);
}
