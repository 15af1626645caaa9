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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wnl/negativity.hpp"
#include "wnl/phase_core.hpp"

namespace wnl {

/// {"sigma": s, "betas": [[re, im], ...], "coeffs": [[[re, im], ...], ...]}.
/// "sigma" defaults to 1; an array of distinct values is rejected with
/// MixedLengthScale. Shape and type errors raise Parse; the state's own
/// validation errors pass through.
CoherentSuperposition parse_state(const nlohmann::json& doc);

/// Reads and parses a state file. Io when unreadable, Parse when malformed.
CoherentSuperposition load_state(const std::string& path);

nlohmann::json load_json(const std::string& path);

nlohmann::json state_to_json(const CoherentSuperposition& state);

/// {"negative", "min", "x", "p", "evals"}.
nlohmann::json certificate_to_json(const Certificate& cert);

/// Shortest-round-trip-safe text with 17 significant digits and a '.'
/// decimal point regardless of locale.
std::string format_double(double value);

/// Header-first CSV emitter.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

}  // namespace wnl
