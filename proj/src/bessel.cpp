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

#include "wnl/bessel.hpp"

#include <cmath>
#include <string>

#include "wnl/error.hpp"

namespace wnl {

namespace {

void check(int n, double x) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "Bessel order must be >= 0");
  if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "Bessel argument is not finite");
  if (std::abs(x) > kBesselMaxArgument) {
    throw Error(ErrorCode::OverflowRange, "Bessel argument " + std::to_string(x) + " beyond 700");
  }
}

double parity(int n, double x) noexcept { return (x < 0.0 && n % 2 != 0) ? -1.0 : 1.0; }

}  // namespace

double bessel_j(int n, double x) {
  check(n, x);
  return parity(n, x) * std::cyl_bessel_j(static_cast<double>(n), std::abs(x));
}

double bessel_i(int n, double x) {
  check(n, x);
  return parity(n, x) * std::cyl_bessel_i(static_cast<double>(n), std::abs(x));
}

}  // namespace wnl
