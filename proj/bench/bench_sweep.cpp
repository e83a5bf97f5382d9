// Copyright 2026 The scatgate Authors
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

// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <numbers>

#include "scatgate/sweep.hpp"

namespace {

using namespace scatgate::sweep;

SweepSpec fig2_sweep(std::size_t samples) {
  SweepSpec spec;
  spec.rho_g = {1.0, 2.0, 4.0};
  spec.gamma_ratio = 0.25;
  spec.kx0_lo = 0.0;
  spec.kx0_hi = 3.0 * std::numbers::pi;
  spec.samples = samples;
  return spec;
}

RobustnessSpec robustness(std::size_t points) {
  RobustnessSpec spec;
  spec.rho_j_points = points;
  spec.kx0_points = points;
  return spec;
}

void BM_ResidualSweepSerial(benchmark::State& state) {
  const auto spec = fig2_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::residual_sweep(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}

void BM_ResidualSweepParallel(benchmark::State& state) {
  const auto spec = fig2_sweep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(residual_sweep(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 3);
}

void BM_RobustnessSerial(benchmark::State& state) {
  const auto spec = robustness(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::robustness_grid(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_RobustnessParallel(benchmark::State& state) {
  const auto spec = robustness(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(robustness_grid(spec));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

BENCHMARK(BM_ResidualSweepSerial)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_ResidualSweepParallel)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_RobustnessSerial)->Arg(41)->Arg(161);
BENCHMARK(BM_RobustnessParallel)->Arg(41)->Arg(161);

}  // namespace

BENCHMARK_MAIN();
