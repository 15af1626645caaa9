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

#include "wnl/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "wnl/error.hpp"
#include "wnl/wigner.hpp"
#include "wnl/wigner_grid.hpp"

namespace wnl {

namespace {

// Normalized value of W and the normalized scale used by sign tests.
struct Probe {
  double value = 0.0;
  double scale = 0.0;
};

struct SearchOutcome {
  MinimumResult min;
  double scale = 0.0;
};

bool on_boundary(const SearchBox& box, PhasePoint pt) {
  const double ex = 1e-12 * (box.x_max - box.x_min);
  const double ep = 1e-12 * (box.p_max - box.p_min);
  return pt.x <= box.x_min + ex || pt.x >= box.x_max - ex || pt.p <= box.p_min + ep ||
         pt.p >= box.p_max - ep;
}

template <typename F>
SearchOutcome search(std::span<const double> field, const PhaseGrid& grid,
                     const MinimizationSpec& spec, const F& f) {
  std::vector<std::size_t> order(field.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(spec.starts), order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&field](std::size_t a, std::size_t b) {
                      return field[a] < field[b] || (field[a] == field[b] && a < b);
                    });

  SearchOutcome out;
  out.min.evaluations = static_cast<long>(field.size());
  out.min.coarse_value = field[order[0]];
  bool have = false;
  const SearchBox& box = spec.box;

  for (std::size_t s = 0; s < k; ++s) {
    const int i = static_cast<int>(order[s] / static_cast<std::size_t>(grid.np()));
    const int j = static_cast<int>(order[s] % static_cast<std::size_t>(grid.np()));
    PhasePoint pt = grid.node(i, j);
    Probe cur = f(pt);
    ++out.min.evaluations;
    double hx = grid.dx();
    double hp = grid.dp();
    for (int iter = 0; iter < spec.refine_iters && std::max(hx, hp) > spec.refine_tol; ++iter) {
      const PhasePoint moves[4] = {{std::min(pt.x + hx, box.x_max), pt.p},
                                   {std::max(pt.x - hx, box.x_min), pt.p},
                                   {pt.x, std::min(pt.p + hp, box.p_max)},
                                   {pt.x, std::max(pt.p - hp, box.p_min)}};
      int best = -1;
      Probe best_probe = cur;
      for (int m = 0; m < 4; ++m) {
        const Probe q = f(moves[m]);
        ++out.min.evaluations;
        if (q.value < best_probe.value) {
          best = m;
          best_probe = q;
        }
      }
      if (best >= 0) {
        pt = moves[best];
        cur = best_probe;
      } else {
        hx *= 0.5;
        hp *= 0.5;
      }
    }
    if (!have || cur.value < out.min.value) {
      out.min.value = cur.value;
      out.min.argmin = pt;
      out.scale = cur.scale;
      have = true;
    }
  }
  if (out.min.coarse_value < out.min.value) {
    const std::size_t idx = order[0];
    out.min.argmin = grid.node(static_cast<int>(idx / static_cast<std::size_t>(grid.np())),
                               static_cast<int>(idx % static_cast<std::size_t>(grid.np())));
    out.scale = f(out.min.argmin).scale;
    out.min.value = out.min.coarse_value;
  }
  if (out.min.value < -spec.abs_tol && on_boundary(box, out.min.argmin)) {
    throw Error(ErrorCode::BoxTooSmall, "negative minimum on the search box boundary");
  }
  return out;
}

struct MemberSign {
  bool negative = false;
  PhasePoint witness;
  long evaluations = 0;
};

bool member_negative(const SearchOutcome& s, double sign_tol) {
  return s.min.value < 0.0 && s.min.value < -sign_tol * s.scale;
}

CriticalCoherenceResult bisect(const std::function<MemberSign(double)>& member,
                               const BisectionOptions& opt) {
  if (!(opt.delta_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "delta_tol must be > 0");
  const bool log_scale = opt.scale == BisectionScale::Logarithmic;
  if (log_scale && !(opt.log_floor > 0.0 && opt.log_floor < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "log_floor must lie in (0, 1)");
  }
  CriticalCoherenceResult r;
  r.method = log_scale ? "bisection-log" : "bisection";

  const double bottom = log_scale ? opt.log_floor : 0.0;
  auto at = [&](double t) {
    return log_scale ? std::exp(std::log(bottom) * (1.0 - t)) : t;
  };
  std::vector<double> deltas{bottom, at(0.25), at(0.5), at(0.75), 1.0};
  std::vector<MemberSign> signs;
  for (double d : deltas) {
    signs.push_back(member(d));
    r.evaluations += signs.back().evaluations;
  }
  if (signs.front().negative == signs.back().negative) {
    throw Error(ErrorCode::NoSignChange, "minimum has the same sign at both ends of the family");
  }
  if (signs.front().negative) {
    throw Error(ErrorCode::NonMonotoneFamily, "negative without coherence but not with it");
  }
  for (std::size_t i = 1; i < signs.size(); ++i) {
    if (signs[i - 1].negative && !signs[i].negative) {
      throw Error(ErrorCode::NonMonotoneFamily, "negativity is not monotone in delta");
    }
  }
  std::size_t first_neg = 0;
  while (!signs[first_neg].negative) ++first_neg;
  double lo = deltas[first_neg - 1];
  double hi = deltas[first_neg];
  r.minimizer = signs[first_neg].witness;

  auto width_ok = [&] {
    return log_scale ? hi - lo <= opt.delta_tol * hi : hi - lo <= opt.delta_tol;
  };
  while (!width_ok() && r.iterations < opt.max_iterations) {
    const double mid = log_scale ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const MemberSign s = member(mid);
    r.evaluations += s.evaluations;
    ++r.iterations;
    if (s.negative) {
      hi = mid;
      r.minimizer = s.witness;
    } else {
      lo = mid;
    }
  }
  r.lower = lo;
  r.upper = hi;
  r.bracket_width = hi - lo;
  r.delta_c = log_scale ? std::sqrt(lo) * std::sqrt(hi) : 0.5 * (lo + hi);
  return r;
}

}  // namespace

void MinimizationSpec::check() const {
  if (!(box.x_min < box.x_max && box.p_min < box.p_max)) {
    throw Error(ErrorCode::InvalidArgument, "search box is degenerate");
  }
  if (nx < 2 || np < 2 || starts < 1 || refine_iters < 0) {
    throw Error(ErrorCode::InvalidArgument, "bad minimization grid settings");
  }
  if (!(refine_tol > 0.0) || !(abs_tol >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
  }
}

MinimizationSpec MinimizationSpec::for_state(const CoherentSuperposition& state) {
  const double b = state.max_abs_beta();
  const double half = kSqrt2 * b + 5.0;
  const double s = state.sigma();
  auto nodes = [b](double width) {
    int n = 101;
    if (b > 0.0) {
      const double step = kPi / (2.0 * kSqrt2 * b) / 6.0;
      n = std::max(n, static_cast<int>(std::ceil(width / step)) + 1);
    }
    return n % 2 == 0 ? n + 1 : n;
  };
  MinimizationSpec spec;
  spec.box = {-half * s, half * s, -half / s, half / s};
  spec.nx = nodes(2.0 * half);
  spec.np = nodes(2.0 * half);
  return spec;
}

MinimumResult minimize_wigner(const CoherentSuperposition& state, const MinimizationSpec& spec) {
  spec.check();
  const PhaseGrid grid = spec.grid();
  const std::vector<double> field = wigner_grid(state, grid);
  const WignerEvaluator ev(state);
  const double n = ev.normalization();
  return search(field, grid, spec, [&ev, n](PhasePoint pt) {
           const WignerTerms t = ev.terms(pt);
           return Probe{(t.diagonal + t.coherent) / n, (t.diagonal + t.coherent_magnitude) / n};
         }).min;
}

Certificate certify_negativity(const CoherentSuperposition& state, const MinimizationSpec& spec) {
  const MinimumResult m = minimize_wigner(state, spec);
  return {m.value < -spec.abs_tol, m.value, m.argmin, m.evaluations};
}

CriticalCoherenceResult critical_delta_numeric(const CoherentSuperposition& coherent,
                                               const MinimizationSpec& spec,
                                               const BisectionOptions& options) {
  spec.check();
  const PhaseGrid grid = spec.grid();
  const SplitField split = wigner_grid_split(coherent, grid);
  const WignerEvaluator ev(coherent);
  const double nd = ev.diagonal_norm();
  const double nc = ev.coherent_norm();
  std::vector<double> field(grid.size());

  auto member = [&](double delta) {
    const double n = nd + delta * nc;
    if (!(n > kMinNormalization)) {
      throw Error(ErrorCode::NonPositiveNorm, "family member has no positive normalization");
    }
    for (std::size_t i = 0; i < field.size(); ++i) {
      field[i] = (split.diagonal[i] + delta * split.coherent[i]) / n;
    }
    const SearchOutcome s = search(field, grid, spec, [&ev, delta, n](PhasePoint pt) {
      const WignerTerms t = ev.terms(pt);
      return Probe{(t.diagonal + delta * t.coherent) / n,
                   (t.diagonal + delta * t.coherent_magnitude) / n};
    });
    return MemberSign{member_negative(s, options.sign_tol), s.min.argmin, s.min.evaluations};
  };
  return bisect(member, options);
}

CriticalCoherenceResult critical_delta_numeric(const StateFamily& family,
                                               const MinimizationSpec& spec,
                                               const BisectionOptions& options) {
  spec.check();
  const PhaseGrid grid = spec.grid();
  auto member = [&](double delta) {
    const CoherentSuperposition state = family(delta);
    const std::vector<double> field = wigner_grid(state, grid);
    const WignerEvaluator ev(state);
    const double n = ev.normalization();
    const SearchOutcome s = search(field, grid, spec, [&ev, n](PhasePoint pt) {
      const WignerTerms t = ev.terms(pt);
      return Probe{(t.diagonal + t.coherent) / n, (t.diagonal + t.coherent_magnitude) / n};
    });
    return MemberSign{member_negative(s, options.sign_tol), s.min.argmin, s.min.evaluations};
  };
  return bisect(member, options);
}

}  // namespace wnl
