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

#include <cmath>
#include <complex>

namespace wnl {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// accurate when an addend is larger in magnitude than the running sum,
/// which is the normal case for interference sums with alternating signs.
template <typename Real>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(Real value) noexcept {
    const Real t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  Real value() const noexcept { return sum_ + compensation_; }

 private:
  Real sum_{0};
  Real compensation_{0};
};

template <typename Real>
class CompensatedSum<std::complex<Real>> {
 public:
  CompensatedSum& operator+=(std::complex<Real> value) noexcept {
    re_ += value.real();
    im_ += value.imag();
    return *this;
  }

  std::complex<Real> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<Real> re_;
  CompensatedSum<Real> im_;
};

}  // namespace wnl
