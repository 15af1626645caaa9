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

#include "wnl/error.hpp"

namespace wnl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::HermiticityViolation: return "HermiticityViolation";
    case ErrorCode::NegativeDiagonal: return "NegativeDiagonal";
    case ErrorCode::NonPositiveNorm: return "NonPositiveNorm";
    case ErrorCode::MixedLengthScale: return "MixedLengthScale";
    case ErrorCode::NonHermitianAccumulation: return "NonHermitianAccumulation";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::OverflowRange: return "OverflowRange";
    case ErrorCode::OutsideValidityWindow: return "OutsideValidityWindow";
    case ErrorCode::NotNegative: return "NotNegative";
    case ErrorCode::BoxTooSmall: return "BoxTooSmall";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::NonMonotoneFamily: return "NonMonotoneFamily";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace wnl
