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

// Gate detection and synthesis. A parameter point implements a two-channel
// probabilistic gate exactly when both spin sectors are transmitted with the
// same probability, |t0| = |t1|. The post-selected channels are then the
// unitaries T / |t0| and R / |r0|, each a relative singlet phase
// diag(e^{i phi}, 1, 1, 1) in the coupled basis.

#include <optional>

#include "scatgate/scattering.hpp"
#include "scatgate/spin.hpp"

namespace scatgate {

inline constexpr double kAnalyticGateTol = 1e-12;
inline constexpr double kRootGateTol = 1e-9;

/// Maps an angle into [0, 2pi).
double wrap_phase(double angle);
/// Distance between two angles on the circle, in [0, pi].
double phase_distance(double a, double b);

/// The canonical gate for relative phase phi.
struct PhaseGate {
  double phase = 0.0;
  SpinOperator4 coupled;        ///< diag(e^{i phi}, 1, 1, 1)
  SpinOperator4 computational;  ///< identity corners, mixing central block
};

PhaseGate phase_gate(double phi);

struct GateReport {
  DimensionlessParams params;
  ChannelAmplitudes singlet;
  ChannelAmplitudes triplet;

  double residual = 0.0;  ///< |t0| - |t1|
  double phi_t = 0.0;     ///< Arg t0 - Arg t1 in [0, 2pi)
  double phi_r = 0.0;     ///< Arg r0 - Arg r1 in [0, 2pi)
  double p_t = 0.0;       ///< |t1|^2
  double p_r = 0.0;       ///< |r1|^2
  bool is_gate = false;

  /// Canonical gates. Empty when the point is not a gate, or when the
  /// channel's amplitude vanishes (perfect transmission or reflection).
  std::optional<PhaseGate> gate_t;
  std::optional<PhaseGate> gate_r;
  /// T / |t0| and R / |r0| in the coupled basis, global phase included.
  std::optional<SpinOperator4> rescaled_t;
  std::optional<SpinOperator4> rescaled_r;

  /// The channel gate puts its central block entries at equal modulus.
  bool max_entangling_t = false;
  bool max_entangling_r = false;
};

/// |t0| - |t1| at params.
double gate_condition_residual(const DimensionlessParams& params);

/// Evaluates the gate condition with tolerance tol and, when it holds,
/// builds both channel gates.
GateReport synthesize_gates(const DimensionlessParams& params,
                            double tol = kAnalyticGateTol);

struct PhasePair {
  double phi_t;
  double phi_r;
};

/// Closed-form gate phases on the resonant line Gamma/J = 1/4, kx0 = n pi.
/// Throws InvalidArgument for rho_j <= 0.
PhasePair rc_phases(double rho_j);

/// (4/pi, 1/pi, pi): the resonant point whose gates entangle maximally.
DimensionlessParams max_entangling_point();

/// <target| rho |target>. Throws InvalidArgument if target is not pure or the
/// bases differ.
double fidelity(const SpinState& target, const SpinState& achieved);

/// Wootters concurrence. Coupled-basis states are converted first.
double concurrence(const SpinState& state);

/// Largest entrywise deviation after removing the global phase, fixed by the
/// first non-negligible entry of `expected` (column-major order).
double distance_up_to_phase(const Matrix4c& actual, const Matrix4c& expected);
double distance_up_to_phase(const Vector4c& actual, const Vector4c& expected);

/// max |U U^dag - 1|, max |U^dag U - 1|.
double unitarity_defect(const Matrix4c& u);

}  // namespace scatgate
