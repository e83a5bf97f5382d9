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

#include "scatgate/gates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "scatgate/errors.hpp"

namespace scatgate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kVanishingAmplitude = 1e-14;
constexpr double kMaxEntanglingTol = 1e-9;
constexpr double kPhaseAnchor = 1e-12;

// sigma_y (x) sigma_y in the computational basis.
Matrix4c spin_flip() {
  Matrix4c y = Matrix4c::Zero();
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

template <typename Dense>
double distance_up_to_phase_impl(const Dense& actual, const Dense& expected) {
  Complex phase{1.0, 0.0};
  for (Eigen::Index i = 0; i < expected.size(); ++i) {
    const Complex e = expected.data()[i];
    const Complex a = actual.data()[i];
    if (std::abs(e) > kPhaseAnchor && std::abs(a) > kPhaseAnchor) {
      phase = (e / std::abs(e)) / (a / std::abs(a));
      break;
    }
  }
  return (actual * phase - expected).cwiseAbs().maxCoeff();
}

}  // namespace

double wrap_phase(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double phase_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

PhaseGate phase_gate(double phi) {
  PhaseGate gate;
  gate.phase = wrap_phase(phi);
  const Complex e = std::polar(1.0, phi);
  gate.coupled = {Vector4c(e, 1.0, 1.0, 1.0).asDiagonal(), Basis::Coupled};
  gate.computational = change_basis(gate.coupled, Basis::Computational);
  return gate;
}

double gate_condition_residual(const DimensionlessParams& params) {
  return std::abs(double_barrier_amplitudes(params, SpinSector::Singlet).t) -
         std::abs(double_barrier_amplitudes(params, SpinSector::Triplet).t);
}

GateReport synthesize_gates(const DimensionlessParams& params, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("gate tolerance must be positive");
  GateReport report;
  report.params = params;
  report.singlet = double_barrier_amplitudes(params, SpinSector::Singlet);
  report.triplet = double_barrier_amplitudes(params, SpinSector::Triplet);
  const auto& s = report.singlet;
  const auto& t = report.triplet;

  report.residual = std::abs(s.t) - std::abs(t.t);
  report.phi_t = wrap_phase(std::arg(s.t) - std::arg(t.t));
  report.phi_r = wrap_phase(std::arg(s.r) - std::arg(t.r));
  report.p_t = std::norm(t.t);
  report.p_r = std::norm(t.r);
  report.is_gate = std::abs(report.residual) < tol;
  if (!report.is_gate) return report;

  const auto kraus = build_kraus_pair(s.t, t.t, s.r, t.r);
  if (std::abs(s.t) >= kVanishingAmplitude) {
    report.gate_t = phase_gate(report.phi_t);
    report.rescaled_t = SpinOperator4{kraus.transmission.entries / std::abs(s.t),
                                      Basis::Coupled};
    report.max_entangling_t = std::abs(std::cos(report.phi_t)) < kMaxEntanglingTol;
  }
  if (std::abs(s.r) >= kVanishingAmplitude) {
    report.gate_r = phase_gate(report.phi_r);
    report.rescaled_r = SpinOperator4{kraus.reflection.entries / std::abs(s.r),
                                      Basis::Coupled};
    report.max_entangling_r = std::abs(std::cos(report.phi_r)) < kMaxEntanglingTol;
  }
  return report;
}

PhasePair rc_phases(double rho_j) {
  if (!(rho_j > 0.0) || !std::isfinite(rho_j))
    throw InvalidArgument("rc_phases requires finite rho_j > 0");
  return {2.0 * std::atan(kPi * rho_j / 4.0),
          -2.0 * std::atan(4.0 / (kPi * rho_j)) + kTwoPi};
}

DimensionlessParams max_entangling_point() {
  return {4.0 / kPi, 1.0 / kPi, kPi};
}

double fidelity(const SpinState& target, const SpinState& achieved) {
  if (!target.is_pure()) throw InvalidArgument("fidelity target must be pure");
  if (target.basis() != achieved.basis())
    throw InvalidArgument("fidelity operands are in different bases");
  const Vector4c& psi = target.vector();
  if (achieved.is_pure()) return std::norm(psi.dot(achieved.vector()));
  return (psi.adjoint() * achieved.density() * psi)(0, 0).real();
}

double concurrence(const SpinState& state) {
  const SpinState s = change_basis(state, Basis::Computational);
  static const Matrix4c flip = spin_flip();
  if (s.is_pure()) {
    const Vector4c& psi = s.vector();
    return std::abs((psi.transpose() * flip * psi)(0, 0));
  }

  const Matrix4c rho = s.density();
  Eigen::SelfAdjointEigenSolver<Matrix4c> rho_eig(rho);
  const Eigen::Vector4d root_vals = rho_eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Matrix4c root = rho_eig.eigenvectors() * root_vals.cast<Complex>().asDiagonal() *
                        rho_eig.eigenvectors().adjoint();
  const Matrix4c tilde = flip * rho.conjugate() * flip;
  const Matrix4c m = root * tilde * root;
  Eigen::SelfAdjointEigenSolver<Matrix4c> m_eig((m + m.adjoint()) / 2.0,
                                                Eigen::EigenvaluesOnly);
  std::array<double, 4> lambda{};
  for (int i = 0; i < 4; ++i) lambda[i] = std::sqrt(std::max(0.0, m_eig.eigenvalues()(i)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double distance_up_to_phase(const Matrix4c& actual, const Matrix4c& expected) {
  return distance_up_to_phase_impl(actual, expected);
}

double distance_up_to_phase(const Vector4c& actual, const Vector4c& expected) {
  return distance_up_to_phase_impl(actual, expected);
}

double unitarity_defect(const Matrix4c& u) {
  const Matrix4c id = Matrix4c::Identity();
  return std::max((u * u.adjoint() - id).cwiseAbs().maxCoeff(),
                  (u.adjoint() * u - id).cwiseAbs().maxCoeff());
}

}  // namespace scatgate
