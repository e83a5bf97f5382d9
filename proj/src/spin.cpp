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

#include "scatgate/spin.hpp"

#include <cmath>

#include "scatgate/errors.hpp"

namespace scatgate {

namespace {

constexpr double kStateTol = 1e-12;
constexpr double kEigenFloor = -1e-10;
constexpr double kKrausTol = 1e-10;
constexpr double kMinProbability = 1e-14;

Matrix4c hermitian_part(const Matrix4c& m) { return (m + m.adjoint()) / 2.0; }

}  // namespace

std::string_view to_string(Basis basis) {
  return basis == Basis::Coupled ? "coupled" : "computational";
}

SpinState SpinState::pure(const Vector4c& amplitudes, Basis basis) {
  if (!amplitudes.allFinite()) throw InvalidArgument("state amplitudes must be finite");
  if (std::abs(amplitudes.norm() - 1.0) > kStateTol)
    throw InvalidArgument("pure state must have unit norm");
  return SpinState(amplitudes, basis);
}

SpinState SpinState::mixed(const Matrix4c& rho, Basis basis) {
  if (!rho.allFinite()) throw InvalidArgument("density matrix must be finite");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTol)
    throw InvalidArgument("density matrix must be Hermitian");
  if (std::abs(rho.trace() - 1.0) > kStateTol)
    throw InvalidArgument("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<Matrix4c> solver(hermitian_part(rho),
                                                 Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenFloor)
    throw InvalidArgument("density matrix must be positive semidefinite");
  return SpinState(hermitian_part(rho), basis);
}

const Vector4c& SpinState::vector() const {
  if (!is_pure()) throw InvalidArgument("state is not pure");
  return std::get<Vector4c>(data_);
}

Matrix4c SpinState::density() const {
  if (const auto* psi = std::get_if<Vector4c>(&data_)) return *psi * psi->adjoint();
  return std::get<Matrix4c>(data_);
}

const Matrix4c& coupled_to_computational() {
  static const Matrix4c w = [] {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix4c m = Matrix4c::Zero();
    // Psi-
    m(1, 0) = s;
    m(2, 0) = -s;
    // up up
    m(0, 1) = 1.0;
    // Psi+
    m(1, 2) = s;
    m(2, 2) = s;
    // down down
    m(3, 3) = 1.0;
    return m;
  }();
  return w;
}

SpinOperator4 change_basis(const SpinOperator4& op, Basis to) {
  if (op.basis == to) return op;
  const Matrix4c& w = coupled_to_computational();
  if (to == Basis::Computational) return {w * op.entries * w.adjoint(), to};
  return {w.adjoint() * op.entries * w, to};
}

SpinState change_basis(const SpinState& state, Basis to) {
  if (state.basis() == to) return state;
  const Matrix4c u = to == Basis::Computational ? coupled_to_computational()
                                                : coupled_to_computational().adjoint();
  if (state.is_pure()) return SpinState::pure(u * state.vector(), to);
  return SpinState::mixed(u * state.density() * u.adjoint(), to);
}

KrausPair build_kraus_pair(Complex t0, Complex t1, Complex r0, Complex r1) {
  if (std::abs(std::norm(t0) + std::norm(r0) - 1.0) > kKrausTol ||
      std::abs(std::norm(t1) + std::norm(r1) - 1.0) > kKrausTol)
    throw InvalidArgument("sector amplitudes violate |t|^2 + |r|^2 = 1");
  Vector4c t(t0, t1, t1, t1);
  Vector4c r(r0, r1, r1, r1);
  return {{t.asDiagonal(), Basis::Coupled}, {r.asDiagonal(), Basis::Coupled}};
}

KrausPair kraus_pair_at(const DimensionlessParams& params) {
  const auto singlet = double_barrier_amplitudes(params, SpinSector::Singlet);
  const auto triplet = double_barrier_amplitudes(params, SpinSector::Triplet);
  return build_kraus_pair(singlet.t, triplet.t, singlet.r, triplet.r);
}

ChannelOutput apply_channel(const SpinState& state, const SpinOperator4& kraus) {
  const SpinState in = change_basis(state, kraus.basis);
  if (in.is_pure()) {
    const Vector4c out = kraus.entries * in.vector();
    const double p = out.squaredNorm();
    if (!(p >= kMinProbability)) throw VanishingProbability(p);
    return {SpinState::pure(out / std::sqrt(p), kraus.basis), p};
  }
  const Matrix4c out = kraus.entries * in.density() * kraus.entries.adjoint();
  const double p = out.trace().real();
  if (!(p >= kMinProbability)) throw VanishingProbability(p);
  return {SpinState::mixed(hermitian_part(out) / p, kraus.basis), p};
}

double transmittivity(const SpinState& state, Complex t0, Complex t1) {
  const Matrix4c rho = change_basis(state, Basis::Coupled).density();
  const double singlet = rho(0, 0).real();
  const double triplet = rho(1, 1).real() + rho(2, 2).real() + rho(3, 3).real();
  return std::norm(t0) * singlet + std::norm(t1) * triplet;
}

namespace states {

SpinState product(bool first_down, bool second_down) {
  Vector4c v = Vector4c::Zero();
  v(2 * static_cast<int>(first_down) + static_cast<int>(second_down)) = 1.0;
  return SpinState::pure(v, Basis::Computational);
}

SpinState psi_minus() {
  return SpinState::pure(Vector4c::Unit(0), Basis::Coupled);
}

SpinState psi_plus() {
  return SpinState::pure(Vector4c::Unit(2), Basis::Coupled);
}

SpinState maximally_mixed(Basis basis) {
  return SpinState::mixed(Matrix4c::Identity() / 4.0, basis);
}

SpinState computational(const Vector4c& amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("state vector must be nonzero");
  return SpinState::pure(amplitudes / n, Basis::Computational);
}

}  // namespace states

}  // namespace scatgate
