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

#include "scatgate/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "scatgate/gates.hpp"
#include "scatgate/scattering.hpp"
#include "scatgate/spin.hpp"
#include "scatgate/sweep.hpp"

namespace scatgate {

namespace {

constexpr double kPi = std::numbers::pi;

class Draws {
 public:
  explicit Draws(std::uint64_t seed) : rng_(seed) {}

  DimensionlessParams params() {
    std::uniform_real_distribution<double> j(-5.0, 5.0), g(0.0, 5.0), k(0.0, 4.0 * kPi);
    DimensionlessParams p{j(rng_), g(rng_), k(rng_)};
    while (!(p.kx0 > 0.0)) p.kx0 = k(rng_);
    return p;
  }

  SpinState state() {
    std::normal_distribution<double> n;
    Vector4c v;
    for (int i = 0; i < 4; ++i) v(i) = {n(rng_), n(rng_)};
    return states::computational(v);
  }

 private:
  std::mt19937_64 rng_;
};

CheckResult bounded(std::string name, double worst, double limit) {
  std::ostringstream d;
  d << "worst " << worst << " (limit " << limit << ")";
  return {std::move(name), worst <= limit, worst, d.str()};
}

CheckResult above(std::string name, double worst, double limit) {
  std::ostringstream d;
  d << "min " << worst << " (must exceed " << limit << ")";
  return {std::move(name), worst > limit, worst, d.str()};
}

double amplitude_gap(const ChannelAmplitudes& a, const ChannelAmplitudes& b) {
  return std::max(std::abs(a.t - b.t), std::abs(a.r - b.r));
}

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i)
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return out;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  Draws draws(options.seed);
  const SpinSector sectors[] = {SpinSector::Singlet, SpinSector::Triplet};

  double norm_worst = 0.0, kraus_worst = 0.0, oracle_worst = 0.0, period_worst = 0.0;
  double merge_worst = 0.0, split_worst = 0.0, pt_worst = 0.0;
  for (std::size_t i = 0; i < options.draws; ++i) {
    const auto p = draws.params();
    for (auto s : sectors) {
      const auto a = double_barrier_amplitudes(p, s);
      norm_worst = std::max(norm_worst, std::abs(std::norm(a.t) + std::norm(a.r) - 1.0));
      const auto oracle = transfer_matrix_amplitudes(
          BarrierChain({{0.0, effective_potential(s, p.rho_j)}, {p.kx0, p.rho_g}}));
      oracle_worst = std::max(oracle_worst, amplitude_gap(a, oracle));
      const auto shifted = double_barrier_amplitudes({p.rho_j, p.rho_g, p.kx0 + kPi}, s);
      period_worst = std::max(period_worst, amplitude_gap(a, shifted));
      const double n = std::max(1.0, std::round(p.kx0 / kPi));
      const auto merged = double_barrier_amplitudes({p.rho_j, p.rho_g, n * kPi}, s);
      const auto single = single_barrier_amplitudes(p.rho_g + effective_potential(s, p.rho_j));
      merge_worst = std::max(merge_worst, std::abs(std::abs(merged.t) - std::abs(single.t)));
    }
    const auto kraus = kraus_pair_at(p);
    const Matrix4c& t = kraus.transmission.entries;
    const Matrix4c& r = kraus.reflection.entries;
    kraus_worst = std::max(kraus_worst, (t * t.adjoint() + r * r.adjoint() - Matrix4c::Identity())
                                            .cwiseAbs()
                                            .maxCoeff());
    const auto state = draws.state();
    const auto s0 = double_barrier_amplitudes(p, SpinSector::Singlet);
    const auto s1 = double_barrier_amplitudes(p, SpinSector::Triplet);
    const auto tout = apply_channel(state, kraus.transmission);
    const auto rout = apply_channel(state, kraus.reflection);
    split_worst = std::max(split_worst, std::abs(tout.probability + rout.probability - 1.0));
    pt_worst = std::max(pt_worst, std::abs(tout.probability - transmittivity(state, s0.t, s1.t)));
  }
  out.push_back(bounded("normalization |t|^2+|r|^2=1", norm_worst, 1e-12));
  out.push_back(bounded("kraus completeness TT^+RR^=1", kraus_worst, 1e-12));
  out.push_back(bounded("closed form vs transfer matrix", oracle_worst, 1e-10));
  out.push_back(bounded("periodicity kx0 -> kx0+pi", period_worst, 1e-12));
  out.push_back(bounded("resonance merge |t|", merge_worst, 1e-12));
  out.push_back(bounded("P_t + P_r = 1", split_worst, 1e-12));
  out.push_back(bounded("transmittivity vs channel probability", pt_worst, 1e-12));

  {
    double worst = 0.0;
    for (double v : log_space(1e-3, 1e3, 61))
      worst = std::max(worst, std::abs(std::abs(single_barrier_amplitudes(v).t) -
                                       std::abs(single_barrier_amplitudes(-v).t)));
    out.push_back(bounded("single barrier |t(V)| = |t(-V)|", worst, 0.0));
  }

  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto state = draws.state();
      const auto there = change_basis(state, Basis::Coupled);
      const auto back = change_basis(there, Basis::Computational);
      worst = std::max(worst, (back.vector() - state.vector()).cwiseAbs().maxCoeff());
    }
    out.push_back(bounded("change_basis involution", worst, 1e-14));
  }

  {
    double residual = 0.0, unitarity = 0.0, split = 0.0;
    for (double j : {0.5, 4.0 / kPi, 2.0, 4.0})
      for (int n = 1; n <= 3; ++n) {
        const auto rep = synthesize_gates({j, j / 4.0, n * kPi});
        residual = std::max(residual, std::abs(rep.residual));
        if (!rep.rescaled_t || !rep.rescaled_r) {
          unitarity = 1.0;
          continue;
        }
        unitarity = std::max({unitarity, unitarity_defect(rep.rescaled_t->entries),
                              unitarity_defect(rep.rescaled_r->entries)});
        split = std::max(split, std::abs(rep.p_t + rep.p_r - 1.0));
      }
    out.push_back(bounded("resonant gate residual (Gamma/J=1/4)", residual, 1e-12));
    out.push_back(bounded("resonant gate unitarity", unitarity, 1e-10));
    out.push_back(bounded("resonant gate p_t + p_r = 1", split, 1e-10));
  }

  {
    double least = 1e300;
    for (double j : {0.5, 1.0, 2.0, 4.0})
      for (int i = 1; i <= 1024; ++i)
        least = std::min(least, std::abs(gate_condition_residual({j, 0.0, kPi * i / 1024.0})));
    out.push_back(above("no static barrier, no gate", least, 1e-3));
  }

  {
    double worst = 0.0, diff = 0.0;
    for (double j : log_space(1e-2, 1e2, 50))
      for (int n = 1; n <= 3; ++n) {
        const auto closed = rc_phases(j);
        const auto rep = synthesize_gates({j, j / 4.0, n * kPi});
        worst = std::max({worst, phase_distance(closed.phi_t, rep.phi_t),
                          phase_distance(closed.phi_r, rep.phi_r)});
        diff = std::max(diff, phase_distance(rep.phi_t - rep.phi_r, kPi));
      }
    out.push_back(bounded("resonant phases vs closed form", worst, 1e-10));
    out.push_back(bounded("phi_t - phi_r = pi (mod 2pi)", diff, 1e-10));
  }

  {
    const auto rep = synthesize_gates(max_entangling_point());
    double worst = phase_distance(rep.phi_t, kPi / 2.0);
    worst = std::max(worst, std::abs(rep.p_t - 0.5));
    worst = std::max(worst, std::abs(rep.p_r - 0.5));
    if (rep.gate_t) {
      const auto outv = rep.gate_t->computational.entries * Vector4c::Unit(1);
      worst = std::max(worst, std::abs(concurrence(SpinState::pure(outv, Basis::Computational)) - 1.0));
    } else {
      worst = 1.0;
    }
    out.push_back(bounded("maximally entangling point", worst, 1e-10));
  }

  {
    double least = 1e300;
    for (double j : log_space(0.1, 10.0, 200)) {
      const DimensionlessParams p{j, j / 4.0, kPi};
      const double par = std::abs(xy_channel_amplitudes(p, XyChannel::Parallel).t);
      const double plus = std::abs(xy_channel_amplitudes(p, XyChannel::PsiPlus).t);
      const double minus = std::abs(xy_channel_amplitudes(p, XyChannel::PsiMinus).t);
      least = std::min(least, std::max(std::abs(par - plus), std::abs(par - minus)));
    }
    out.push_back(above("XY coupling has no resonant gate", least, 1e-6));
  }

  {
    auto mixture_gap = [](const DimensionlessParams& p) {
      const auto kraus = kraus_pair_at(p);
      const auto a = states::psi_minus();
      const auto b = states::product(false, false);
      const auto mix = SpinState::mixed(
          0.5 * (change_basis(a, Basis::Computational).density() + b.density()),
          Basis::Computational);
      const auto& k = kraus.transmission;
      const Matrix4c joint =
          change_basis(apply_channel(mix, k).state, Basis::Computational).density();
      const Matrix4c separate =
          0.5 * (change_basis(apply_channel(a, k).state, Basis::Computational).density() +
                 change_basis(apply_channel(b, k).state, Basis::Computational).density());
      return (joint - separate).cwiseAbs().maxCoeff();
    };
    out.push_back(bounded("linear map at a gate point", mixture_gap(max_entangling_point()), 1e-12));
    out.push_back(above("nonlinear map off the gate condition", mixture_gap({2.0, 0.0, 1.0}), 1e-3));
  }

  {
    sweep::SweepSpec spec;
    spec.rho_g = {2.0};
    spec.gamma_ratio = 2.0;
    const auto scans = sweep::find_gate_roots(spec);
    double worst = 0.0;
    std::size_t count = 0;
    for (const auto& scan : scans)
      for (const auto& root : scan.roots) {
        ++count;
        const auto& rep = root.report;
        if (!rep.is_gate || !rep.rescaled_t || !rep.rescaled_r) {
          worst = 1.0;
          continue;
        }
        worst = std::max({worst, unitarity_defect(rep.rescaled_t->entries),
                          unitarity_defect(rep.rescaled_r->entries),
                          std::abs(rep.p_t + rep.p_r - 1.0)});
      }
    auto check = bounded("off-resonance roots are gates", worst, 1e-10);
    if (count == 0) {
      check.passed = false;
      check.detail = "no roots found";
    }
    out.push_back(check);
  }

  {
    double worst = 0.0;
    for (auto channel : {sweep::Channel::Transmission, sweep::Channel::Reflection})
      for (auto preset : {sweep::StatePreset::UpDown, sweep::StatePreset::Superposition,
                          sweep::StatePreset::ProductY}) {
        sweep::RobustnessSpec spec;
        spec.channel = channel;
        spec.initial_state = sweep::preset_state(preset);
        const auto cell =
            sweep::evaluate_robustness_cell(spec, sweep::ideal_output(spec), 0.0, 0.0);
        worst = std::max(worst, cell.fidelity ? std::abs(*cell.fidelity - 1.0) : 1.0);
      }
    out.push_back(bounded("unperturbed gate fidelity = 1", worst, 1e-10));
  }

  return out;
}

}  // namespace scatgate
