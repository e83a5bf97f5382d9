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

#include "scatgate/errors.hpp"
#include "scatgate/sweep.hpp"

// Single-threaded references for the OpenMP kernels in sweep.cpp.

namespace scatgate::sweep::serial {

std::vector<SweepRow> residual_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows;
  const auto grid = spec.kx0_grid();
  for (const auto& [j, g] : spec.pairs())
    for (double kx0 : grid) rows.push_back(evaluate_sweep_point(j, g, kx0, spec.channel));
  return rows;
}

std::vector<RobustnessCell> robustness_grid(const RobustnessSpec& spec) {
  spec.validate();
  if (!spec.initial_state.is_pure())
    throw InvalidArgument("robustness initial state must be pure");
  const SpinState ideal = ideal_output(spec);
  std::vector<RobustnessCell> cells;
  for (double dj : spec.rho_j_deltas())
    for (double dk : spec.kx0_deltas()) cells.push_back(evaluate_robustness_cell(spec, ideal, dj, dk));
  return cells;
}

}  // namespace scatgate::sweep::serial
