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

// Grid kernel timings: separable OpenMP kernel vs per-node serial reference.

#include <benchmark/benchmark.h>

#include <random>

#include "wnl/cat.hpp"
#include "wnl/circle_cat.hpp"
#include "wnl/verify.hpp"
#include "wnl/wigner_grid.hpp"

namespace {

wnl::CoherentSuperposition bench_state(int n) {
  std::mt19937_64 rng(0);
  return wnl::random_state(rng, static_cast<std::size_t>(n), 3.0);
}

void BM_GridParallel(benchmark::State& st) {
  const auto s = bench_state(static_cast<int>(st.range(0)));
  const wnl::PhaseGrid g(-8, 8, -8, 8, 101, 101);
  for (auto _ : st) benchmark::DoNotOptimize(wnl::wigner_grid(s, g));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
}

void BM_GridSerial(benchmark::State& st) {
  const auto s = bench_state(static_cast<int>(st.range(0)));
  const wnl::PhaseGrid g(-8, 8, -8, 8, 101, 101);
  for (auto _ : st) benchmark::DoNotOptimize(wnl::wigner_grid_serial(s, g));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(g.size()));
}

void BM_CircleGrid(benchmark::State& st) {
  const auto s = wnl::circle_state({.m = 64, .d = 8.0, .delta = 1.0});
  const wnl::PhaseGrid g(-16, 16, -16, 16, 201, 201);
  for (auto _ : st) benchmark::DoNotOptimize(wnl::wigner_grid(s, g));
}

}  // namespace

BENCHMARK(BM_GridParallel)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridSerial)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CircleGrid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
