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

// Two-spin states and operators. The first spin is the flying particle, the
// second the impurity. Two fixed orderings are used throughout:
//
//   Coupled        {|Psi->, |up up>, |Psi+>, |down down>}
//   Computational  {|up up>, |up down>, |down up>, |down down>}
//
// with |Psi+-> = (|up down> +- |down up>) / sqrt(2).

#include <Eigen/Dense>
#include <complex>
#include <string_view>
#include <variant>

#include "scatgate/scattering.hpp"

namespace scatgate {

using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

enum class Basis { Coupled, Computational };

std::string_view to_string(Basis basis);

struct SpinOperator4 {
  Matrix4c entries = Matrix4c::Identity();
  Basis basis = Basis::Coupled;
};

/// Pure (vector) or mixed (density matrix) two-spin state. Pure states stay
/// vectors through channels; density() promotes on demand.
class SpinState {
 public:
  /// Throws InvalidArgument unless the vector has unit norm within 1e-12.
  static SpinState pure(const Vector4c& amplitudes, Basis basis);
  /// Throws InvalidArgument unless rho is Hermitian and has unit trace within
  /// 1e-12 and no eigenvalue below -1e-10.
  static SpinState mixed(const Matrix4c& rho, Basis basis);

  bool is_pure() const noexcept { return std::holds_alternative<Vector4c>(data_); }
  Basis basis() const noexcept { return basis_; }

  /// Vector form; only valid for pure states.
  const Vector4c& vector() const;
  Matrix4c density() const;

 private:
  SpinState(std::variant<Vector4c, Matrix4c> data, Basis basis)
      : data_(std::move(data)), basis_(basis) {}

  std::variant<Vector4c, Matrix4c> data_;
  Basis basis_;
};

/// Columns are the coupled basis vectors written in the computational basis.
const Matrix4c& coupled_to_computational();

SpinOperator4 change_basis(const SpinOperator4& op, Basis to);
SpinState change_basis(const SpinState& state, Basis to);

/// Transmission and reflection Kraus operators, diagonal in the coupled basis.
struct KrausPair {
  SpinOperator4 transmission;
  SpinOperator4 reflection;
};

/// Builds T = diag(t0, t1, t1, t1) and R = diag(r0, r1, r1, r1). Throws
/// InvalidArgument when |t|^2 + |r|^2 deviates from 1 by more than 1e-10 in
/// either sector.
KrausPair build_kraus_pair(Complex t0, Complex t1, Complex r0, Complex r1);

/// Convenience: Kraus pair of the double-barrier setup at params.
KrausPair kraus_pair_at(const DimensionlessParams& params);

struct ChannelOutput {
  SpinState state;
  double probability;
};

/// Post-selected action of one Kraus operator: rho -> K rho K^dag / p with
/// p = Tr[K rho K^dag]. The state is moved into the operator's basis first.
/// Throws VanishingProbability when p < 1e-14.
ChannelOutput apply_channel(const SpinState& state, const SpinOperator4& kraus);

/// |t0|^2 rho_- + |t1|^2 (rho_upup + rho_++ + rho_downdown).
double transmittivity(const SpinState& state, Complex t0, Complex t1);

namespace states {

/// Computational-basis product state |a b>, with true meaning spin down.
SpinState product(bool first_down, bool second_down);
SpinState psi_minus();
SpinState psi_plus();
SpinState maximally_mixed(Basis basis = Basis::Computational);
/// Normalizes the given computational-basis amplitudes.
SpinState computational(const Vector4c& amplitudes);

}  // namespace states

}  // namespace scatgate
