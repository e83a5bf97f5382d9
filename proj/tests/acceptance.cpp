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

// Acceptance battery: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure. argv[1] is the path of the scatgate binary.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "scatgate/gates.hpp"
#include "scatgate/scattering.hpp"
#include "scatgate/spin.hpp"
#include "scatgate/sweep.hpp"

namespace fs = std::filesystem;
using namespace scatgate;
using scatgate::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr SpinSector kSectors[] = {SpinSector::Singlet, SpinSector::Triplet};

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::vector<double> log_space(double lo, double hi, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, i / (n - 1.0)));
  return out;
}

double gap(const ChannelAmplitudes& a, const ChannelAmplitudes& b) {
  return std::max(std::abs(a.t - b.t), std::abs(a.r - b.r));
}

ChannelAmplitudes oracle(const DimensionlessParams& p, SpinSector s) {
  return transfer_matrix_amplitudes(BarrierChain({{0.0, effective_potential(s, p.rho_j)}, {p.kx0, p.rho_g}}));
}

void normalization() {
  Gen gen(101);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = gen.params();
    for (auto s : kSectors) {
      const auto a = double_barrier_amplitudes(p, s);
      worst = std::max(worst, std::abs(std::norm(a.t) + std::norm(a.r) - 1.0));
    }
  }
  report("1 normalization", worst <= 1e-12, fmt("max ||t|^2+|r|^2-1| = %.3g (tol 1e-12)", worst));
}

void kraus_completeness() {
  Gen gen(101);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto k = kraus_pair_at(gen.params());
    const Matrix4c& t = k.transmission.entries;
    const Matrix4c& r = k.reflection.entries;
    worst = std::max(worst, (t * t.adjoint() + r * r.adjoint() - Matrix4c::Identity()).cwiseAbs().maxCoeff());
  }
  report("2 kraus completeness", worst <= 1e-12, fmt("max |TT^+RR^-1| = %.3g (tol 1e-12)", worst));
}

void oracle_equivalence() {
  Gen gen(103);
  double worst_mod = 0.0, worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = gen.params();
    for (auto s : kSectors) {
      const auto a = double_barrier_amplitudes(p, s), o = oracle(p, s);
      worst_mod = std::max({worst_mod, std::abs(std::abs(a.t) - std::abs(o.t)), std::abs(std::abs(a.r) - std::abs(o.r))});
      worst = std::max(worst, gap(a, o));
    }
  }
  report("3 closed form vs transfer matrix", worst <= 1e-10 && worst_mod <= 1e-10,
         fmt("moduli %.3g, complex %.3g (tol 1e-10)", worst_mod, worst));
}

void resonance_gate() {
  double residual = 0.0, unitarity = 0.0;
  bool built = true;
  for (double j : {0.5, 4.0 / kPi, 2.0, 4.0})
    for (int n = 1; n <= 3; ++n) {
      const auto rep = synthesize_gates({j, j / 4.0, n * kPi});
      residual = std::max(residual, std::abs(rep.residual));
      if (!rep.is_gate || !rep.rescaled_t || !rep.rescaled_r) {
        built = false;
        continue;
      }
      unitarity = std::max({unitarity, unitarity_defect(rep.rescaled_t->entries),
                            unitarity_defect(rep.rescaled_r->entries)});
    }
  report("4 resonance gate", built && residual < 1e-12 && unitarity <= 1e-10,
         fmt("residual %.3g (tol 1e-12), unitarity defect %.3g (tol 1e-10)", residual, unitarity));
}

void no_barrier() {
  double least = 1e300;
  for (double j : {0.5, 1.0, 2.0, 4.0})
    for (int i = 1; i <= 4096; ++i)
      least = std::min(least, std::abs(gate_condition_residual({j, 0.0, kPi * i / 4096.0})));
  report("5 no static barrier, no gate", least > 1e-3, fmt("min |residual| = %.4g (must exceed 1e-3)", least));
}

void phase_closed_forms() {
  double worst = 0.0, diff = 0.0;
  for (double j : log_space(1e-2, 1e2, 50)) {
    const auto rep = synthesize_gates({j, j / 4.0, kPi});
    const auto closed = rc_phases(j);
    worst = std::max({worst, phase_distance(rep.phi_t, closed.phi_t), phase_distance(rep.phi_r, closed.phi_r)});
    diff = std::max(diff, phase_distance(rep.phi_t - rep.phi_r, kPi));
  }
  report("6 phase closed forms", worst <= 1e-10 && diff <= 1e-10,
         fmt("phase error %.3g, |phi_t-phi_r-pi| %.3g (tol 1e-10)", worst, diff));
}

void max_entangling() {
  const auto rep = synthesize_gates(max_entangling_point());
  if (!rep.gate_t) {
    report("7 maximally entangling gate", false, "no transmission gate built");
    return;
  }
  const Complex i{0.0, 1.0};
  Matrix4c expected = Matrix4c::Identity();
  expected(1, 1) = expected(2, 2) = (1.0 + i) / 2.0;
  expected(1, 2) = expected(2, 1) = (1.0 - i) / 2.0;
  const double phase = phase_distance(rep.phi_t, kPi / 2.0);
  const double matrix = distance_up_to_phase(rep.gate_t->computational.entries, expected);
  const Vector4c out = rep.gate_t->computational.entries * Vector4c::Unit(1);
  const double s = 1.0 / std::sqrt(2.0);
  const double bell = distance_up_to_phase(out, Vector4c(0.0, s, -i * s, 0.0));
  const double conc = std::abs(concurrence(SpinState::pure(out, Basis::Computational)) - 1.0);
  const double probs = std::max(std::abs(rep.p_t - 0.5), std::abs(rep.p_r - 0.5));
  const double worst = std::max({phase, matrix, bell, conc, probs});
  std::ostringstream d;
  d << "phi_t err " << phase << ", matrix " << matrix << ", bell " << bell << ", concurrence " << conc
    << ", p_t " << rep.p_t << ", p_r " << rep.p_r << " (tol 1e-10)";
  report("7 maximally entangling gate", worst <= 1e-10, d.str());
}

void robustness() {
  sweep::RobustnessSpec spec;
  const auto cells = sweep::robustness_grid(spec);
  double least = 1e300;
  bool defined = true;
  for (const auto& c : cells) {
    if (!c.fidelity) defined = false;
    else least = std::min(least, *c.fidelity);
  }
  report("8a transmission fidelity |ud>, 41x41 +-20%", defined && least >= 0.93,
         fmt("min F = %.4f (required >= 0.93)", least));

  double refl = 1e300;
  bool refl_defined = true;
  for (auto preset : {sweep::StatePreset::UpDown, sweep::StatePreset::Superposition, sweep::StatePreset::ProductY}) {
    sweep::RobustnessSpec r;
    r.channel = sweep::Channel::Reflection;
    r.initial_state = sweep::preset_state(preset);
    for (const auto& c : sweep::robustness_grid(r)) {
      if (c.delta_rho_j != 0.0 || std::abs(c.delta_kx0) > 8.0 + 1e-12) continue;
      if (!c.fidelity) refl_defined = false;
      else refl = std::min(refl, *c.fidelity);
    }
  }
  report("8b reflection fidelity, |dkx0| <= 8%, all presets", refl_defined && refl > 0.9,
         fmt("min F = %.4f (must exceed 0.9)", refl));
}

void xy_no_gate() {
  double least = 1e300;
  for (double j : log_space(0.1, 10.0, 200)) {
    const DimensionlessParams p{j, j / 4.0, kPi};
    const double par = std::abs(xy_channel_amplitudes(p, XyChannel::Parallel).t);
    const double plus = std::abs(xy_channel_amplitudes(p, XyChannel::PsiPlus).t);
    const double minus = std::abs(xy_channel_amplitudes(p, XyChannel::PsiMinus).t);
    least = std::min(least, std::max(std::abs(par - plus), std::abs(par - minus)));
  }
  report("9 XY coupling, no resonant gate", least > 1e-6,
         fmt("min over rho_j of the larger residual = %.4g (must exceed 1e-6)", least));
}

void periodicity() {
  Gen gen(109);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto p = gen.params();
    for (auto s : kSectors)
      worst = std::max(worst, gap(double_barrier_amplitudes(p, s),
                                  double_barrier_amplitudes({p.rho_j, p.rho_g, p.kx0 + kPi}, s)));
  }
  report("10 periodicity in kx0", worst <= 1e-12, fmt("max amplitude change = %.3g (tol 1e-12)", worst));
}

double mixture_gap(const KrausPair& k, const SpinState& a, const SpinState& b) {
  const Matrix4c ra = change_basis(a, Basis::Coupled).density();
  const Matrix4c rb = change_basis(b, Basis::Coupled).density();
  const auto mix = SpinState::mixed(0.5 * (ra + rb), Basis::Coupled);
  double worst = 0.0;
  for (const auto* op : {&k.transmission, &k.reflection}) {
    const Matrix4c joint = apply_channel(mix, *op).state.density();
    const Matrix4c separate =
        0.5 * (apply_channel(a, *op).state.density() + apply_channel(b, *op).state.density());
    worst = std::max(worst, (joint - separate).cwiseAbs().maxCoeff());
  }
  return worst;
}

void linearity() {
  Gen gen(111);
  const auto on = kraus_pair_at(max_entangling_point());
  double linear = 0.0;
  for (int i = 0; i < 200; ++i) linear = std::max(linear, mixture_gap(on, gen.pure_state(), gen.pure_state()));
  const auto off = kraus_pair_at({2.0, 0.0, 1.0});
  const double witness = mixture_gap(off, states::psi_minus(), states::product(false, false));
  report("11 linearity only under the gate condition", linear <= 1e-12 && witness > 1e-3,
         fmt("gate point %.3g (tol 1e-12), witness %.4g (must exceed 1e-3)", linear, witness));
}

int run_cli(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism(const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / ("scatgate_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands{
      {"sweep", "sweep --rho-g 1 2 4 --gamma-ratio 0.25 --kx0-max 3pi --samples 301"},
      {"roots", "roots --rho-g 0.5 2 --gamma-ratio 2 --kx0-max 2pi"},
      {"gate", "gate --rho-j 1.2732395447351628 --gamma-ratio 0.25 --kx0 pi --format json"},
      {"phases", "phases --format json"},
      {"robustness", "robustness --rho-j 1.2732395447351628 --gamma-ratio 0.25 --channel r --state product_y"},
      {"verify", "verify --draws 200"},
  };
  std::vector<std::string> bad;
  for (const auto& [name, args] : commands) {
    const auto a = (dir / (name + ".1")).string(), b = (dir / (name + ".2")).string();
    const int ca = run_cli(cli, args + " -o " + a), cb = run_cli(cli, args + " -o " + b);
    if (ca != 0 || cb != 0 || !fs::exists(a) || slurp(a).empty() || slurp(a) != slurp(b)) bad.push_back(name);
  }
  fs::remove_all(dir);
  std::string detail = std::to_string(commands.size()) + " commands run twice";
  for (const auto& b : bad) detail += ", differs or failed: " + b;
  report("12 deterministic CLI output", bad.empty(), detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-scatgate>\n", argv[0]);
    return 2;
  }
  const std::vector<std::function<void()>> checks{
      normalization, kraus_completeness, oracle_equivalence, resonance_gate, no_barrier, phase_closed_forms,
      max_entangling, robustness,        xy_no_gate,         periodicity,    linearity,
  };
  for (const auto& c : checks) {
    try {
      c();
    } catch (const std::exception& e) {
      report("exception", false, e.what());
    }
  }
  determinism(argv[1]);
  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
