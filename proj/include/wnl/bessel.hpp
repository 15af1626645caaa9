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

namespace wnl {

inline constexpr double kBesselMaxArgument = 700.0;

/// Bessel functions of the first kind for integer order n >= 0. Negative
/// arguments use the parity (-1)^n. Both throw OverflowRange for |x| > 700
/// and InvalidArgument for n < 0.
double bessel_j(int n, double x);
double bessel_i(int n, double x);

}  // namespace wnl
