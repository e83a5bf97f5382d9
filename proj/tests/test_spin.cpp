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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "scatgate/errors.hpp"
#include "scatgate/spin.hpp"

using namespace scatgate;
using scatgate::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

void require_valid_density(const Matrix4c& rho) {
  REQUIRE(max_abs(rho - rho.adjoint()) < 1e-12);
  REQUIRE(std::abs(rho.trace() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Matrix4c> eig(rho, Eigen::EigenvaluesOnly);
  REQUIRE(eig.eigenvalues().minCoeff() > -1e-10);
}

}  // namespace

TEST_CASE("state construction") {
  CHECK_NOTHROW(SpinState::pure(Vector4c::Unit(2), Basis::Coupled));
  CHECK_THROWS_AS(SpinState::pure(Vector4c::Unit(2) * 1.01, Basis::Coupled), InvalidArgument);
  Matrix4c not_hermitian = Matrix4c::Identity() / 4.0;
  not_hermitian(0, 1) = 0.1;
  CHECK_THROWS_AS(SpinState::mixed(not_hermitian, Basis::Computational), InvalidArgument);
  CHECK_THROWS_AS(SpinState::mixed(Matrix4c::Identity() / 2.0, Basis::Computational), InvalidArgument);
  Matrix4c negative = Matrix4c::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(SpinState::mixed(negative, Basis::Computational), InvalidArgument);
  CHECK_THROWS_AS(states::maximally_mixed().vector(), InvalidArgument);
}

TEST_CASE("Kraus pair") {
  SUBCASE("free propagation") {
    const auto k = build_kraus_pair(1.0, 1.0, 0.0, 0.0);
    CHECK(max_abs(k.transmission.entries - Matrix4c::Identity()) == 0.0);
    CHECK(max_abs(k.reflection.entries) == 0.0);
    CHECK(k.transmission.basis == Basis::Coupled);
  }
  SUBCASE("completeness does not see phases") {
    const Complex t0 = std::polar(std::sqrt(0.3), 1.1), r0 = std::polar(std::sqrt(0.7), -2.0);
    const Complex t1 = std::polar(std::sqrt(0.9), 0.2), r1 = std::polar(std::sqrt(0.1), 2.9);
    const auto k = build_kraus_pair(t0, t1, r0, r1);
    const Matrix4c& t = k.transmission.entries;
    const Matrix4c& r = k.reflection.entries;
    CHECK(max_abs(t * t.adjoint() + r * r.adjoint() - Matrix4c::Identity()) < 1e-15);
    CHECK(t(0, 0) == t0);
    CHECK(t(3, 3) == t1);
    CHECK(r(2, 2) == r1);
  }
  SUBCASE("property: completeness at scattering amplitudes") {
    Gen gen(21);
    for (int i = 0; i < 1000; ++i) {
      const auto k = kraus_pair_at(gen.params());
      const Matrix4c& t = k.transmission.entries;
      const Matrix4c& r = k.reflection.entries;
      REQUIRE(max_abs(t * t.adjoint() + r * r.adjoint() - Matrix4c::Identity()) < 1e-12);
    }
  }
  SUBCASE("rejects non-normalized sectors") {
    CHECK_THROWS_AS(build_kraus_pair(1.0, 0.5, 0.5, 0.5), InvalidArgument);
    CHECK_THROWS_AS(build_kraus_pair(0.6, 1.0, 0.6, 0.0), InvalidArgument);
  }
}

TEST_CASE("change of basis") {
  SUBCASE("relative singlet phase takes the mixing form") {
    for (double phi : {0.3, kPi / 2.0, 2.0, 5.5}) {
      const Complex e = std::polar(1.0, phi);
      const SpinOperator4 coupled{Vector4c(e, 1.0, 1.0, 1.0).asDiagonal(), Basis::Coupled};
      const auto comp = change_basis(coupled, Basis::Computational);
      Matrix4c expected = Matrix4c::Identity();
      expected(1, 1) = expected(2, 2) = (1.0 + e) / 2.0;
      expected(1, 2) = expected(2, 1) = (1.0 - e) / 2.0;
      CHECK(max_abs(comp.entries - expected) < 1e-15);
      CHECK(comp.basis == Basis::Computational);
    }
  }
  SUBCASE("identity stays identity") {
    const auto id = change_basis(SpinOperator4{}, Basis::Computational);
    CHECK(max_abs(id.entries - Matrix4c::Identity()) < 1e-15);
    const SpinOperator4 phase_zero{Vector4c(1.0, 1.0, 1.0, 1.0).asDiagonal(), Basis::Coupled};
    CHECK(max_abs(change_basis(phase_zero, Basis::Computational).entries - Matrix4c::Identity()) < 1e-15);
  }
  SUBCASE("basis vectors") {
    const double s = 1.0 / std::sqrt(2.0);
    const auto minus = change_basis(states::psi_minus(), Basis::Computational);
    CHECK(std::abs(minus.vector()(1) - s) < 1e-16);
    CHECK(std::abs(minus.vector()(2) + s) < 1e-16);
    const auto uu = change_basis(states::product(false, false), Basis::Coupled);
    CHECK(std::abs(uu.vector()(1) - 1.0) < 1e-16);
  }
  SUBCASE("property: involutive, spectrum and purity preserving") {
    Gen gen(22);
    for (int i = 0; i < 200; ++i) {
      const auto psi = gen.pure_state();
      const auto back = change_basis(change_basis(psi, Basis::Coupled), Basis::Computational);
      REQUIRE((back.vector() - psi.vector()).cwiseAbs().maxCoeff() < 1e-14);

      const auto rho = gen.mixed_state(Basis::Coupled);
      const auto moved = change_basis(rho, Basis::Computational);
      const Matrix4c a = rho.density(), b = moved.density();
      REQUIRE(std::abs((a * a).trace() - (b * b).trace()) < 1e-14);
      Eigen::SelfAdjointEigenSolver<Matrix4c> ea(a, Eigen::EigenvaluesOnly), eb(b, Eigen::EigenvaluesOnly);
      REQUIRE((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() < 1e-14);
      const auto again = change_basis(moved, Basis::Coupled);
      REQUIRE(max_abs(again.density() - a) < 1e-14);
    }
  }
}

TEST_CASE("channel application") {
  const DimensionlessParams p{2.0, 0.3, 0.8};
  const auto s0 = double_barrier_amplitudes(p, SpinSector::Singlet);
  const auto s1 = double_barrier_amplitudes(p, SpinSector::Triplet);
  const auto k = kraus_pair_at(p);

  SUBCASE("identity channel") {
    Gen gen(23);
    const auto psi = gen.pure_state();
    const auto out = apply_channel(psi, SpinOperator4{Matrix4c::Identity(), Basis::Computational});
    CHECK(out.probability == doctest::Approx(1.0).epsilon(1e-15));
    CHECK((out.state.vector() - psi.vector()).cwiseAbs().maxCoeff() < 1e-15);
  }
  SUBCASE("singlet input transmits with |t0|^2") {
    const auto out = apply_channel(SpinState::mixed(states::psi_minus().density(), Basis::Coupled),
                                   k.transmission);
    CHECK(std::abs(out.probability - std::norm(s0.t)) < 1e-15);
  }
  SUBCASE("equal sector moduli make the probability state independent") {
    const Complex t0 = std::polar(std::sqrt(0.4), 0.5), t1 = std::polar(std::sqrt(0.4), -1.0);
    const Complex r0 = std::polar(std::sqrt(0.6), 2.0), r1 = std::polar(std::sqrt(0.6), 0.1);
    const auto eq = build_kraus_pair(t0, t1, r0, r1);
    Gen gen(24);
    for (int i = 0; i < 50; ++i) {
      REQUIRE(std::abs(apply_channel(gen.pure_state(), eq.transmission).probability - 0.4) < 1e-14);
      REQUIRE(std::abs(apply_channel(gen.mixed_state(), eq.transmission).probability - 0.4) < 1e-14);
    }
  }
  SUBCASE("property: outputs are states and the two channels sum to one") {
    Gen gen(25);
    for (int i = 0; i < 500; ++i) {
      const auto kp = kraus_pair_at(gen.params());
      const auto rho = gen.mixed_state();
      const auto tout = apply_channel(rho, kp.transmission);
      const auto rout = apply_channel(rho, kp.reflection);
      require_valid_density(tout.state.density());
      require_valid_density(rout.state.density());
      REQUIRE(std::abs(tout.probability + rout.probability - 1.0) < 1e-12);
      const auto psi = gen.pure_state();
      const auto pure_out = apply_channel(psi, kp.transmission);
      REQUIRE(pure_out.state.is_pure());
      REQUIRE(std::abs(pure_out.state.vector().norm() - 1.0) < 1e-12);
    }
  }
  SUBCASE("vanishing probability is an error") {
    // rho_j = rho_g = 0 never reflects.
    const auto free = kraus_pair_at({0.0, 0.0, 1.0});
    CHECK_THROWS_AS(apply_channel(states::product(true, false), free.reflection), VanishingProbability);
    CHECK_THROWS_AS(apply_channel(states::maximally_mixed(), free.reflection), VanishingProbability);
  }
  SUBCASE("transmittivity formula") {
    CHECK(std::abs(transmittivity(states::product(false, false), s0.t, s1.t) - std::norm(s1.t)) < 1e-15);
    CHECK(std::abs(transmittivity(states::maximally_mixed(), s0.t, s1.t) -
                   (std::norm(s0.t) + 3.0 * std::norm(s1.t)) / 4.0) < 1e-15);
    const Complex a = std::polar(0.6, 1.0), b = std::polar(0.6, -2.0);
    Gen gen(26);
    for (int i = 0; i < 20; ++i) REQUIRE(std::abs(transmittivity(gen.mixed_state(), a, b) - 0.36) < 1e-14);
    for (int i = 0; i < 200; ++i) {
      const auto rho = gen.mixed_state(i % 2 ? Basis::Coupled : Basis::Computational);
      REQUIRE(std::abs(transmittivity(rho, s0.t, s1.t) - apply_channel(rho, k.transmission).probability) < 1e-12);
    }
  }
}

TEST_CASE("normalized map is linear only on the gate condition") {
  auto mixture_gap = [](const KrausPair& k, const SpinState& a, const SpinState& b) {
    const Matrix4c ra = change_basis(a, Basis::Coupled).density();
    const Matrix4c rb = change_basis(b, Basis::Coupled).density();
    const auto mix = SpinState::mixed(0.5 * (ra + rb), Basis::Coupled);
    const Matrix4c joint = apply_channel(mix, k.transmission).state.density();
    const Matrix4c separate = 0.5 * (apply_channel(a, k.transmission).state.density() +
                                     apply_channel(b, k.transmission).state.density());
    return max_abs(joint - separate);
  };
  const auto a = states::psi_minus();
  const auto b = states::product(false, false);
  // Unequal moduli: the singlet weight shifts to |t0|^2 / (|t0|^2 + |t1|^2).
  const auto off = kraus_pair_at({2.0, 0.0, 1.0});
  const double t0 = std::norm(double_barrier_amplitudes({2.0, 0.0, 1.0}, SpinSector::Singlet).t);
  const double t1 = std::norm(double_barrier_amplitudes({2.0, 0.0, 1.0}, SpinSector::Triplet).t);
  CHECK(mixture_gap(off, a, b) == doctest::Approx(std::abs(t0 / (t0 + t1) - 0.5)).epsilon(1e-12));
  CHECK(mixture_gap(off, a, b) > 1e-3);

  const auto on = kraus_pair_at({4.0 / kPi, 1.0 / kPi, kPi});
  Gen gen(27);
  for (int i = 0; i < 100; ++i)
    REQUIRE(mixture_gap(on, gen.pure_state(), gen.mixed_state()) < 1e-12);
}
