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

// wnl: Wigner functions of coherent-state superpositions from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wnl/bessel.hpp"
#include "wnl/cat.hpp"
#include "wnl/circle_cat.hpp"
#include "wnl/error.hpp"
#include "wnl/negativity.hpp"
#include "wnl/parallel.hpp"
#include "wnl/state_io.hpp"
#include "wnl/verify.hpp"
#include "wnl/wigner.hpp"
#include "wnl/wigner_grid.hpp"

namespace {

using nlohmann::json;
using wnl::Error;
using wnl::ErrorCode;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2, kIoError = 3 };

// Flags shared by every subcommand; unset ones fall back to the config file.
struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::vector<int> grid;
  std::vector<double> box;
  std::optional<double> tol;
};

struct RunConfig {
  std::string command;
  json doc = json::object();
  std::string out;
  std::uint64_t seed = 0;
  std::optional<std::pair<int, int>> grid;
  std::optional<wnl::SearchBox> box;
  std::optional<double> tol;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--config", f.config, "JSON run configuration");
  sub->add_option("--out", f.out, "Output path (stdout when omitted)");
  sub->add_option("--seed", f.seed, "Seed for randomized draws");
  sub->add_option("--grid", f.grid, "Grid size nx,np")->delimiter(',')->expected(2);
  sub->add_option("--box", f.box, "Box xmin,xmax,pmin,pmax")->delimiter(',')->expected(4);
  sub->add_option("--tol", f.tol, "Tolerance (bisection width)");
}

template <typename T>
T get_or(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("config key '") + key + "': " + e.what());
  }
}

RunConfig resolve(const std::string& command, const CommonFlags& f) {
  RunConfig rc;
  rc.command = command;
  if (!f.config.empty()) {
    rc.doc = wnl::load_json(f.config);
    if (!rc.doc.is_object()) throw Error(ErrorCode::Parse, "config must be a JSON object");
  }
  rc.out = f.out.empty() ? get_or<std::string>(rc.doc, "out", "") : f.out;
  rc.seed = f.seed ? *f.seed : get_or<std::uint64_t>(rc.doc, "seed", 0);

  std::vector<int> grid = f.grid.empty() ? get_or<std::vector<int>>(rc.doc, "grid", {}) : f.grid;
  if (!grid.empty()) {
    if (grid.size() != 2 || grid[0] < 2 || grid[1] < 2) {
      throw Error(ErrorCode::InvalidArgument, "grid must be nx,np with both >= 2");
    }
    rc.grid = {grid[0], grid[1]};
  }
  std::vector<double> box = f.box.empty() ? get_or<std::vector<double>>(rc.doc, "box", {}) : f.box;
  if (!box.empty()) {
    if (box.size() != 4 || !(box[0] < box[1]) || !(box[2] < box[3])) {
      throw Error(ErrorCode::InvalidArgument, "box must be xmin,xmax,pmin,pmax with min < max");
    }
    rc.box = wnl::SearchBox{box[0], box[1], box[2], box[3]};
  }
  if (f.tol) {
    rc.tol = *f.tol;
  } else if (rc.doc.contains("tol")) {
    rc.tol = get_or<double>(rc.doc, "tol", 0.0);
  }
  if (rc.tol && !(*rc.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  return rc;
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Error(ErrorCode::Io, "write to stdout failed");
    return;
  }
  std::ofstream file(rc.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot open " + rc.out + " for writing");
  file << text;
  file.close();
  if (!file) throw Error(ErrorCode::Io, "write to " + rc.out + " failed");
}

wnl::MinimizationSpec spec_for(const RunConfig& rc, const wnl::CoherentSuperposition& state) {
  wnl::MinimizationSpec spec = wnl::MinimizationSpec::for_state(state);
  if (rc.box) spec.box = *rc.box;
  if (rc.grid) {
    spec.nx = rc.grid->first;
    spec.np = rc.grid->second;
  }
  return spec;
}

std::vector<double> range_from(const json& doc, const char* key, std::vector<double> fallback) {
  if (!doc.contains(key)) return fallback;
  const json& v = doc.at(key);
  if (v.is_array()) return get_or<std::vector<double>>(doc, key, {});
  if (v.is_object()) {
    const double start = get_or<double>(v, "start", 0.0);
    const double stop = get_or<double>(v, "stop", 0.0);
    const double step = get_or<double>(v, "step", 0.0);
    if (!(step > 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(key) + ".step must be > 0");
    std::vector<double> out;
    for (int i = 0; start + i * step <= stop + 1e-9 * step; ++i) out.push_back(start + i * step);
    return out;
  }
  throw Error(ErrorCode::Parse, std::string(key) + " must be a list or {start, stop, step}");
}

std::string status_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoSignChange: return "no_sign_change";
    case ErrorCode::NonMonotoneFamily: return "non_monotone";
    case ErrorCode::BoxTooSmall: return "box_too_small";
    default: return "error";
  }
}

int cmd_grid(const RunConfig& rc, const std::string& state_flag) {
  std::optional<wnl::CoherentSuperposition> state;
  if (!state_flag.empty()) {
    state.emplace(wnl::load_state(state_flag));
  } else if (rc.doc.contains("state") && rc.doc["state"].is_string()) {
    state.emplace(wnl::load_state(rc.doc["state"].get<std::string>()));
  } else if (rc.doc.contains("state")) {
    state.emplace(wnl::parse_state(rc.doc["state"]));
  } else {
    throw Error(ErrorCode::InvalidArgument, "grid needs --state or a 'state' config entry");
  }
  const wnl::MinimizationSpec defaults = wnl::MinimizationSpec::for_state(*state);
  const wnl::SearchBox box = rc.box.value_or(defaults.box);
  const auto [nx, np] = rc.grid.value_or(std::pair<int, int>{101, 101});
  const wnl::PhaseGrid grid(box.x_min, box.x_max, box.p_min, box.p_max, nx, np);
  const std::vector<double> w = wnl::wigner_grid(*state, grid);

  std::ostringstream out;
  wnl::CsvWriter csv(out, {"x", "p", "w"});
  for (int i = 0; i < grid.nx(); ++i) {
    for (int j = 0; j < grid.np(); ++j) {
      csv.row({wnl::format_double(grid.x(i)), wnl::format_double(grid.p(j)),
               wnl::format_double(w[grid.index(i, j)])});
    }
  }
  emit(rc, out.str());
  return kOk;
}

int cmd_cat_sweep(const RunConfig& rc, const std::vector<double>& re_beta_flag) {
  std::vector<double> re_betas =
      re_beta_flag.empty()
          ? range_from(rc.doc, "re_beta", {0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0})
          : re_beta_flag;
  if (re_betas.empty()) throw Error(ErrorCode::InvalidArgument, "re_beta range is empty");
  for (double a : re_betas) {
    if (!(a > 0.0 && a <= 3.0)) throw Error(ErrorCode::InvalidArgument, "re_beta must lie in (0, 3]");
  }
  const double theta = get_or<double>(rc.doc, "theta", wnl::kPi / 4.0);
  const double phi = get_or<double>(rc.doc, "phi", wnl::kPi);
  wnl::BisectionOptions opt;
  opt.delta_tol = rc.tol.value_or(1e-3);

  std::ostringstream out;
  wnl::CsvWriter csv(out, {"re_beta", "delta_c_numeric", "delta_c_analytic", "abs_err", "status"});
  for (double a : re_betas) {
    const wnl::CatParams params{theta, 1.0, phi, a};
    const wnl::CoherentSuperposition state = wnl::cat_state(params);
    const double analytic = wnl::critical_delta_analytic(a);
    try {
      const wnl::CriticalCoherenceResult r =
          wnl::critical_delta_numeric(state, spec_for(rc, state), opt);
      csv.row({wnl::format_double(a), wnl::format_double(r.delta_c), wnl::format_double(analytic),
               wnl::format_double(std::abs(r.delta_c - analytic)), "ok"});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSignChange && e.code() != ErrorCode::NonMonotoneFamily &&
          e.code() != ErrorCode::BoxTooSmall) {
        throw;
      }
      csv.row({wnl::format_double(a), "nan", wnl::format_double(analytic), "nan",
               status_name(e.code())});
    }
  }
  emit(rc, out.str());
  return kOk;
}

int cmd_circle_sweep(const RunConfig& rc, std::optional<int> m_flag,
                     const std::vector<double>& d_flag) {
  const int m = m_flag ? *m_flag : get_or<int>(rc.doc, "m", 64);
  std::vector<double> ds = d_flag.empty() ? range_from(rc.doc, "d", {1, 2, 3, 4, 5, 6, 7, 8}) : d_flag;
  if (ds.empty()) throw Error(ErrorCode::InvalidArgument, "d range is empty");
  for (double d : ds) {
    if (!(d >= 1.0 && d <= 8.0)) throw Error(ErrorCode::InvalidArgument, "d must lie in [1, 8]");
  }
  wnl::BisectionOptions opt;
  opt.scale = wnl::BisectionScale::Logarithmic;
  opt.delta_tol = rc.tol.value_or(1e-3);

  std::ostringstream out;
  wnl::CsvWriter csv(out, {"d", "delta_c_numeric", "delta_c_bound", "status"});
  for (double d : ds) {
    const wnl::CircleCatParams params{m, d, 1.0};
    const wnl::CoherentSuperposition state = wnl::circle_state(params);
    const double bound = wnl::critical_delta_bound(params).delta_bar;
    try {
      const wnl::CriticalCoherenceResult r =
          wnl::critical_delta_numeric(state, spec_for(rc, state), opt);
      csv.row({wnl::format_double(d), wnl::format_double(r.delta_c), wnl::format_double(bound),
               "ok"});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoSignChange && e.code() != ErrorCode::NonMonotoneFamily &&
          e.code() != ErrorCode::BoxTooSmall) {
        throw;
      }
      csv.row({wnl::format_double(d), "nan", wnl::format_double(bound), status_name(e.code())});
    }
  }
  emit(rc, out.str());
  return kOk;
}

struct RadialFlags {
  std::optional<int> m;
  std::optional<double> d;
  std::optional<double> delta;
  std::optional<double> r_max;
  std::optional<int> samples;
};

int cmd_circle_radial(const RunConfig& rc, const RadialFlags& f) {
  wnl::CircleCatParams params;
  params.m = f.m ? *f.m : get_or<int>(rc.doc, "m", 64);
  params.d = f.d ? *f.d : get_or<double>(rc.doc, "d", 8.0);
  params.delta = f.delta ? *f.delta : get_or<double>(rc.doc, "delta", 1.0);
  params.check();
  const double r_max = f.r_max ? *f.r_max : get_or<double>(rc.doc, "r_max", params.validity_radius());
  const int samples = f.samples ? *f.samples : get_or<int>(rc.doc, "samples", 400);
  if (!(r_max > 0.0) || samples < 2) {
    throw Error(ErrorCode::InvalidArgument, "need r_max > 0 and samples >= 2");
  }
  const wnl::CircleWigner w(params);
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < samples; ++i) {
    const double radius = r_max * i / (samples - 1);
    const double r = 2.0 * wnl::kSqrt2 * radius * params.d;
    const bool inside = radius < params.validity_radius();
    rows[static_cast<std::size_t>(i)] = {
        wnl::format_double(radius), wnl::format_double(w.exact(wnl::PolarPoint(radius, 0.0))),
        inside ? wnl::format_double(w.bessel(radius)) : std::string(),
        wnl::format_double(wnl::bessel_j(0, r) / wnl::kPi), inside ? "1" : "0"};
  }
  std::ostringstream out;
  wnl::CsvWriter csv(out, {"r", "w_exact", "w_bessel", "j0_over_pi", "in_window"});
  for (const auto& row : rows) csv.row(row);
  emit(rc, out.str());
  return kOk;
}

wnl::Complex flipped_cross_wigner(wnl::Complex beta_j, wnl::Complex beta_k, wnl::PhasePoint pt,
                                  double sigma) noexcept {
  return std::conj(wnl::cross_wigner(beta_j, beta_k, pt, sigma));
}

int cmd_verify(const RunConfig& rc, const std::vector<std::string>& suite_flag, bool inject_fault) {
  wnl::VerifyOptions opt;
  opt.seed = rc.seed;
  opt.suites = suite_flag.empty() ? get_or<std::vector<std::string>>(rc.doc, "suites", {}) : suite_flag;
  if (inject_fault) opt.kernel = &flipped_cross_wigner;
  const std::vector<wnl::CheckResult> results = wnl::run_verification(opt);
  std::ostringstream out;
  wnl::print_report(out, results);
  emit(rc, out.str());
  return wnl::all_passed(results) ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner functions and negativity of coherent-state superpositions"};
  app.require_subcommand(1);

  CommonFlags grid_f, cat_f, circle_f, radial_f, verify_f;
  std::string state_path;
  std::vector<double> re_betas;
  std::optional<int> sweep_m;
  std::vector<double> sweep_d;
  RadialFlags radial;
  std::vector<std::string> suites;
  bool inject_fault = false;

  CLI::App* grid = app.add_subcommand("grid", "Evaluate W on a rectangular grid (x,p,w CSV)");
  add_common(grid, grid_f);
  grid->add_option("--state", state_path, "State JSON file");

  CLI::App* cat = app.add_subcommand("cat-sweep", "Numeric vs analytic critical coherence of cats");
  add_common(cat, cat_f);
  cat->add_option("--re-beta", re_betas, "Comma-separated Re beta values")->delimiter(',');

  CLI::App* circle = app.add_subcommand("circle-sweep", "Critical coherence of circle cats vs d");
  add_common(circle, circle_f);
  circle->add_option("--m", sweep_m, "Number of components (even)");
  circle->add_option("--d", sweep_d, "Comma-separated radii")->delimiter(',');

  CLI::App* rad = app.add_subcommand("circle-radial", "Radial WF profile of a circle cat");
  add_common(rad, radial_f);
  rad->add_option("--m", radial.m, "Number of components (even)");
  rad->add_option("--d", radial.d, "Circle radius");
  rad->add_option("--delta", radial.delta, "Residual coherence");
  rad->add_option("--r-max", radial.r_max, "Largest radius sampled");
  rad->add_option("--samples", radial.samples, "Number of radii");

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
  add_common(verify, verify_f);
  verify->add_option("--suite", suites, "Suite to run (repeatable)");
  verify->add_flag("--inject-fault", inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    wnl::apply_thread_limit_from_env();
    if (grid->parsed()) return cmd_grid(resolve("grid", grid_f), state_path);
    if (cat->parsed()) return cmd_cat_sweep(resolve("cat-sweep", cat_f), re_betas);
    if (circle->parsed()) return cmd_circle_sweep(resolve("circle-sweep", circle_f), sweep_m, sweep_d);
    if (rad->parsed()) return cmd_circle_radial(resolve("circle-radial", radial_f), radial);
    if (verify->parsed()) return cmd_verify(resolve("verify", verify_f), suites, inject_fault);
  } catch (const Error& e) {
    std::cerr << "wnl: " << e.what() << '\n';
    return e.code() == ErrorCode::Io ? kIoError : kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "wnl: Parse: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
