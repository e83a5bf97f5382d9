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

#pragma once

// Parameter sweeps: residual curves over kx0, bracketing root search for
// gate points, and fidelity-robustness grids around an ideal gate.
//
// Grid cells are independent, so the public entry points evaluate them with
// OpenMP. The `serial` namespace keeps plain-loop reference versions with
// identical output; tests pin the two against each other and bench/ times
// them. Results are always assembled in row-major order.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scatgate/gates.hpp"
#include "scatgate/scattering.hpp"
#include "scatgate/spin.hpp"

namespace scatgate::sweep {

enum class Channel { Transmission, Reflection };

std::string_view to_string(Channel channel);
Channel parse_channel(std::string_view name);

/// (rho_j, rho_g) pairs to sweep plus a kx0 range. Pairs come from either a
/// fixed Gamma/J ratio applied to rho_j (or rho_g) values, or from explicit
/// zipped rho_j / rho_g lists.
struct SweepSpec {
  std::vector<double> rho_j;
  std::vector<double> rho_g;
  std::optional<double> gamma_ratio;
  double kx0_lo = 0.0;
  double kx0_hi = 3.14159265358979323846;
  std::size_t samples = 257;
  Channel channel = Channel::Transmission;

  void validate() const;
  /// Resolved (rho_j, rho_g) pairs in input order.
  std::vector<std::pair<double, double>> pairs() const;
  /// samples points from kx0_lo to kx0_hi inclusive.
  std::vector<double> kx0_grid() const;
};

struct SweepRow {
  double kx0;
  double rho_j;
  double rho_g;
  double abs_t0;
  double abs_t1;
  double abs_r0;
  double abs_r1;
  double residual;  ///< |t0|-|t1| or |r0|-|r1| depending on the channel
  double phi_t;
  double phi_r;
};

/// Rows ordered by (pair, kx0).
std::vector<SweepRow> residual_sweep(const SweepSpec& spec);

SweepRow evaluate_sweep_point(double rho_j, double rho_g, double kx0, Channel channel);

struct RootRecord {
  double kx0_root;
  DimensionlessParams params;
  GateReport report;
};

struct RootScan {
  double rho_j;
  double rho_g;
  /// The residual vanishes over the whole period (e.g. rho_j = 0), so there
  /// is no discrete root set.
  bool identically_zero = false;
  std::vector<RootRecord> roots;
};

inline constexpr std::size_t kDefaultScanPoints = 1024;

/// Scans kx0 in (0, pi] on scan_points uniform samples, bisects every sign
/// change of the residual, merges roots closer than 1e-6 and replicates them
/// by period pi over [kx0_lo, kx0_hi]. Each root carries a GateReport built
/// with tolerance tol; bisection stops when |residual| < tol and the bracket
/// has collapsed to rounding.
std::vector<RootScan> find_gate_roots(const SweepSpec& spec, double tol = kRootGateTol,
                                      std::size_t scan_points = kDefaultScanPoints);

enum class DeviationMode { Percent, Absolute };

enum class StatePreset { UpDown, Superposition, ProductY };

std::string_view to_string(StatePreset preset);
StatePreset parse_state_preset(std::string_view name);
/// |up down>; (|uu> + |dd> + |ud> - |du>)/2; (|u> + |d>) (x) (|u> + i|d>) / 2.
SpinState preset_state(StatePreset preset);

struct RobustnessSpec {
  DimensionlessParams base = max_entangling_point();
  double rho_j_range = 20.0;  ///< half-width, percent of base or absolute
  std::size_t rho_j_points = 41;
  double kx0_range = 20.0;
  std::size_t kx0_points = 41;
  DeviationMode mode = DeviationMode::Percent;
  SpinState initial_state = preset_state(StatePreset::UpDown);
  Channel channel = Channel::Transmission;

  /// Throws InvalidArgument on bad grids or when base is not a gate point.
  void validate() const;
  std::vector<double> rho_j_deltas() const;
  std::vector<double> kx0_deltas() const;
  /// Perturbed parameters with Gamma/J held at the base ratio.
  DimensionlessParams perturbed(double delta_rho_j, double delta_kx0) const;
};

struct RobustnessCell {
  double delta_rho_j;
  double delta_kx0;
  std::optional<double> fidelity;  ///< empty when the channel cannot fire
  double success_prob;
};

/// Rows ordered by (delta_rho_j, delta_kx0).
std::vector<RobustnessCell> robustness_grid(const RobustnessSpec& spec);

RobustnessCell evaluate_robustness_cell(const RobustnessSpec& spec, const SpinState& ideal_output,
                                        double delta_rho_j, double delta_kx0);

/// U |psi> for the ideal gate of spec.channel at spec.base.
SpinState ideal_output(const RobustnessSpec& spec);

namespace serial {

std::vector<SweepRow> residual_sweep(const SweepSpec& spec);
std::vector<RobustnessCell> robustness_grid(const RobustnessSpec& spec);

}  // namespace serial

}  // namespace scatgate::sweep
