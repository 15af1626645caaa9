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

#include "wnl/state_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "wnl/error.hpp"

namespace wnl {

namespace {

using nlohmann::json;

Complex parse_complex(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw Error(ErrorCode::Parse, where + " must be [re, im]");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

double parse_sigma(const json& doc) {
  if (!doc.contains("sigma")) return 1.0;
  const json& s = doc["sigma"];
  if (s.is_number()) return s.get<double>();
  if (!s.is_array() || s.empty()) throw Error(ErrorCode::Parse, "sigma must be a number");
  for (const json& v : s) {
    if (!v.is_number()) throw Error(ErrorCode::Parse, "sigma entries must be numbers");
  }
  const double first = s[0].get<double>();
  for (const json& v : s) {
    if (v.get<double>() != first) {
      throw Error(ErrorCode::MixedLengthScale, "components with different sigma are not supported");
    }
  }
  return first;
}

}  // namespace

CoherentSuperposition parse_state(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "state must be a JSON object");
  if (!doc.contains("betas") || !doc["betas"].is_array()) {
    throw Error(ErrorCode::Parse, "missing array 'betas'");
  }
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw Error(ErrorCode::Parse, "missing array 'coeffs'");
  }
  const double sigma = parse_sigma(doc);
  const json& jb = doc["betas"];
  const json& jc = doc["coeffs"];
  const std::size_t n = jb.size();
  if (n == 0) throw Error(ErrorCode::Parse, "'betas' is empty");
  if (jc.size() != n) throw Error(ErrorCode::Parse, "'coeffs' must have one row per beta");

  std::vector<Complex> betas;
  betas.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    betas.push_back(parse_complex(jb[j], "betas[" + std::to_string(j) + "]"));
  }
  CoeffMatrix rho(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (!jc[j].is_array() || jc[j].size() != n) {
      throw Error(ErrorCode::Parse, "coeffs row " + std::to_string(j) + " has wrong length");
    }
    for (std::size_t k = 0; k < n; ++k) {
      rho(j, k) = parse_complex(jc[j][k],
                                "coeffs[" + std::to_string(j) + "][" + std::to_string(k) + "]");
    }
  }
  return {std::move(betas), std::move(rho), sigma};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

CoherentSuperposition load_state(const std::string& path) {
  try {
    return parse_state(load_json(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + e.what());
  }
}

json state_to_json(const CoherentSuperposition& state) {
  json betas = json::array();
  json coeffs = json::array();
  for (std::size_t j = 0; j < state.size(); ++j) {
    betas.push_back({state.beta(j).real(), state.beta(j).imag()});
    json row = json::array();
    for (std::size_t k = 0; k < state.size(); ++k) {
      row.push_back({state.coeff(j, k).real(), state.coeff(j, k).imag()});
    }
    coeffs.push_back(row);
  }
  return {{"sigma", state.sigma()}, {"betas", betas}, {"coeffs", coeffs}};
}

json certificate_to_json(const Certificate& cert) {
  return {{"negative", cert.negative},
          {"min", cert.min},
          {"x", cert.witness.x},
          {"p", cert.witness.p},
          {"evals", cert.evaluations}};
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw Error(ErrorCode::Io, "number formatting failed");
  return {buf, ptr};
}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw Error(ErrorCode::InvalidArgument, "CSV row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

}  // namespace wnl
