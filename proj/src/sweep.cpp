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

#include "scatgate/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "scatgate/errors.hpp"

namespace scatgate::sweep {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootMergeDistance = 1e-6;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

// Rethrows the first exception captured inside a parallel region.
class ExceptionSlot {
 public:
  void capture() {
#pragma omp critical(scatgate_exception_slot)
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

double bisect_root(double a, double b, double fa, double rho_j, double rho_g) {
  for (int iter = 0; iter < 200; ++iter) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = gate_condition_residual({rho_j, rho_g, m});
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  const double fa_abs = std::abs(gate_condition_residual({rho_j, rho_g, a}));
  const double fb_abs = std::abs(gate_condition_residual({rho_j, rho_g, b}));
  return fa_abs <= fb_abs ? a : b;
}

double circular_gap(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, kPi - d);
}

RootScan scan_pair(double rho_j, double rho_g, const SweepSpec& spec, double tol,
                   std::size_t n) {
  RootScan scan{rho_j, rho_g, false, {}};

  // Samples at pi*i/n, i = 1..n, so the last sample is pi exactly.
  std::vector<double> x(n), f(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = kPi * static_cast<double>(i + 1) / static_cast<double>(n);
  x.back() = kPi;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
    f[i] = gate_condition_residual({rho_j, rho_g, x[i]});

  if (std::all_of(f.begin(), f.end(), [tol](double v) { return std::abs(v) < tol; })) {
    scan.identically_zero = true;
    return scan;
  }

  std::vector<double> base;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(f[i]) < tol) base.push_back(x[i]);
  for (std::size_t i = 0; i < n; ++i) {
    // The last bracket wraps from pi to pi + x[0] by periodicity.
    const bool wrap = i + 1 == n;
    const double fa = f[i];
    const double fb = wrap ? f[0] : f[i + 1];
    if (std::abs(fa) < tol || std::abs(fb) < tol) continue;
    if ((fa < 0.0) == (fb < 0.0)) continue;
    const double a = x[i];
    const double b = wrap ? kPi + x[0] : x[i + 1];
    double root = bisect_root(a, b, fa, rho_j, rho_g);
    if (std::abs(gate_condition_residual({rho_j, rho_g, root})) >= tol) continue;
    if (root > kPi) root -= kPi;
    base.push_back(root);
  }

  std::sort(base.begin(), base.end());
  std::vector<double> unique;
  for (double r : base) {
    const bool duplicate = std::any_of(unique.begin(), unique.end(), [r](double u) {
      return circular_gap(u, r) < kRootMergeDistance;
    });
    if (!duplicate) unique.push_back(r);
  }

  constexpr double slack = 1e-12;
  for (double r : unique) {
    const auto first = static_cast<long>(std::ceil((spec.kx0_lo - slack - r) / kPi));
    const auto last = static_cast<long>(std::floor((spec.kx0_hi + slack - r) / kPi));
    for (long m = first; m <= last; ++m) {
      const double k = r + static_cast<double>(m) * kPi;
      if (!(k > 0.0)) continue;
      const DimensionlessParams p{rho_j, rho_g, k};
      scan.roots.push_back({k, p, synthesize_gates(p, tol)});
    }
  }
  std::sort(scan.roots.begin(), scan.roots.end(),
            [](const RootRecord& a, const RootRecord& b) { return a.kx0_root < b.kx0_root; });
  return scan;
}

}  // namespace

std::string_view to_string(Channel channel) {
  return channel == Channel::Transmission ? "transmission" : "reflection";
}

Channel parse_channel(std::string_view name) {
  if (name == "transmission" || name == "t") return Channel::Transmission;
  if (name == "reflection" || name == "r") return Channel::Reflection;
  throw InvalidArgument("unknown channel '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
  if (samples < 2) throw InvalidArgument("sweep needs at least 2 kx0 samples");
  if (!std::isfinite(kx0_lo) || !std::isfinite(kx0_hi) || !(kx0_lo < kx0_hi))
    throw InvalidArgument("kx0 range must be finite with lo < hi");
  if (gamma_ratio) {
    if (!std::isfinite(*gamma_ratio) || *gamma_ratio < 0.0)
      throw InvalidArgument("gamma ratio must be finite and non-negative");
    if (rho_j.empty() == rho_g.empty())
      throw InvalidArgument("with a gamma ratio give exactly one of rho_j or rho_g");
    if (!rho_g.empty() && *gamma_ratio == 0.0)
      throw InvalidArgument("cannot derive rho_j from rho_g with a zero gamma ratio");
  } else {
    if (rho_j.empty()) throw InvalidArgument("sweep needs rho_j values");
    if (rho_g.size() != rho_j.size() && rho_g.size() != 1)
      throw InvalidArgument("rho_g must have one value or one per rho_j");
  }
  for (const auto& [j, g] : pairs()) {
    if (!std::isfinite(j) || !std::isfinite(g))
      throw InvalidArgument("sweep parameters must be finite");
    if (g < 0.0) throw InvalidArgument("rho_g must be non-negative");
  }
}

std::vector<std::pair<double, double>> SweepSpec::pairs() const {
  std::vector<std::pair<double, double>> out;
  if (gamma_ratio) {
    for (double j : rho_j) out.emplace_back(j, *gamma_ratio * j);
    for (double g : rho_g) out.emplace_back(g / *gamma_ratio, g);
    return out;
  }
  for (std::size_t i = 0; i < rho_j.size(); ++i)
    out.emplace_back(rho_j[i], rho_g.empty() ? 0.0 : rho_g[rho_g.size() == 1 ? 0 : i]);
  return out;
}

std::vector<double> SweepSpec::kx0_grid() const { return linspace(kx0_lo, kx0_hi, samples); }

SweepRow evaluate_sweep_point(double rho_j, double rho_g, double kx0, Channel channel) {
  const DimensionlessParams p{rho_j, rho_g, kx0};
  const auto s = double_barrier_amplitudes(p, SpinSector::Singlet);
  const auto t = double_barrier_amplitudes(p, SpinSector::Triplet);
  SweepRow row{kx0,
               rho_j,
               rho_g,
               std::abs(s.t),
               std::abs(t.t),
               std::abs(s.r),
               std::abs(t.r),
               0.0,
               wrap_phase(std::arg(s.t) - std::arg(t.t)),
               wrap_phase(std::arg(s.r) - std::arg(t.r))};
  row.residual = channel == Channel::Transmission ? row.abs_t0 - row.abs_t1
                                                  : row.abs_r0 - row.abs_r1;
  return row;
}

std::vector<SweepRow> residual_sweep(const SweepSpec& spec) {
  spec.validate();
  const auto pairs = spec.pairs();
  const auto grid = spec.kx0_grid();
  const auto total = static_cast<std::ptrdiff_t>(pairs.size() * grid.size());
  std::vector<SweepRow> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto& [j, g] = pairs[static_cast<std::size_t>(idx) / grid.size()];
    rows[idx] = evaluate_sweep_point(j, g, grid[static_cast<std::size_t>(idx) % grid.size()],
                                     spec.channel);
  }
  return rows;
}

std::vector<RootScan> find_gate_roots(const SweepSpec& spec, double tol,
                                      std::size_t scan_points) {
  spec.validate();
  if (!(tol > 0.0)) throw InvalidArgument("root tolerance must be positive");
  if (scan_points < 2) throw InvalidArgument("root scan needs at least 2 points");
  std::vector<RootScan> out;
  for (const auto& [j, g] : spec.pairs()) out.push_back(scan_pair(j, g, spec, tol, scan_points));
  return out;
}

std::string_view to_string(StatePreset preset) {
  switch (preset) {
    case StatePreset::UpDown:
      return "up_down";
    case StatePreset::Superposition:
      return "superposition";
    case StatePreset::ProductY:
      return "product_y";
  }
  return "";
}

StatePreset parse_state_preset(std::string_view name) {
  for (auto p : {StatePreset::UpDown, StatePreset::Superposition, StatePreset::ProductY})
    if (name == to_string(p)) return p;
  throw InvalidArgument("unknown state preset '" + std::string(name) + "'");
}

SpinState preset_state(StatePreset preset) {
  const Complex i{0.0, 1.0};
  switch (preset) {
    case StatePreset::UpDown:
      return states::product(false, true);
    case StatePreset::Superposition:
      return states::computational(Vector4c(1.0, 1.0, -1.0, 1.0));
    case StatePreset::ProductY:
      return states::computational(Vector4c(1.0, i, 1.0, i));
  }
  throw InvalidArgument("unknown state preset");
}

void RobustnessSpec::validate() const {
  if (rho_j_points < 2 || kx0_points < 2)
    throw InvalidArgument("robustness grids need at least 2 points per axis");
  if (!std::isfinite(rho_j_range) || !std::isfinite(kx0_range) || rho_j_range < 0.0 ||
      kx0_range < 0.0)
    throw InvalidArgument("deviation ranges must be finite and non-negative");
  base.validate();
  if (!(std::abs(gate_condition_residual(base)) < kRootGateTol))
    throw InvalidArgument("robustness base point does not satisfy the gate condition");
}

std::vector<double> RobustnessSpec::rho_j_deltas() const {
  return linspace(-rho_j_range, rho_j_range, rho_j_points);
}

std::vector<double> RobustnessSpec::kx0_deltas() const {
  return linspace(-kx0_range, kx0_range, kx0_points);
}

DimensionlessParams RobustnessSpec::perturbed(double delta_rho_j, double delta_kx0) const {
  DimensionlessParams p = base;
  if (mode == DeviationMode::Percent) {
    p.rho_j = base.rho_j * (1.0 + delta_rho_j / 100.0);
    p.kx0 = base.kx0 * (1.0 + delta_kx0 / 100.0);
  } else {
    p.rho_j = base.rho_j + delta_rho_j;
    p.kx0 = base.kx0 + delta_kx0;
  }
  if (base.rho_j != 0.0) p.rho_g = base.rho_g / base.rho_j * p.rho_j;
  return p;
}

SpinState ideal_output(const RobustnessSpec& spec) {
  const auto report = synthesize_gates(spec.base, kRootGateTol);
  const auto& gate = spec.channel == Channel::Transmission ? report.gate_t : report.gate_r;
  if (!gate) throw InvalidArgument("ideal gate is undefined for this channel");
  const SpinState in = change_basis(spec.initial_state, Basis::Computational);
  return states::computational(gate->computational.entries * in.vector());
}

RobustnessCell evaluate_robustness_cell(const RobustnessSpec& spec, const SpinState& ideal,
                                        double delta_rho_j, double delta_kx0) {
  const auto kraus = kraus_pair_at(spec.perturbed(delta_rho_j, delta_kx0));
  const auto& op = spec.channel == Channel::Transmission ? kraus.transmission : kraus.reflection;
  const SpinOperator4 k = change_basis(op, Basis::Computational);
  RobustnessCell cell{delta_rho_j, delta_kx0, std::nullopt, 0.0};
  try {
    const auto out = apply_channel(spec.initial_state, k);
    cell.fidelity = fidelity(ideal, out.state);
    cell.success_prob = out.probability;
  } catch (const VanishingProbability& e) {
    cell.success_prob = e.probability();
  }
  return cell;
}

std::vector<RobustnessCell> robustness_grid(const RobustnessSpec& spec) {
  spec.validate();
  if (!spec.initial_state.is_pure())
    throw InvalidArgument("robustness initial state must be pure");
  const SpinState ideal = ideal_output(spec);
  const auto dj = spec.rho_j_deltas();
  const auto dk = spec.kx0_deltas();
  const auto total = static_cast<std::ptrdiff_t>(dj.size() * dk.size());
  std::vector<RobustnessCell> cells(static_cast<std::size_t>(total));
  ExceptionSlot error;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    try {
      const auto u = static_cast<std::size_t>(idx);
      cells[u] = evaluate_robustness_cell(spec, ideal, dj[u / dk.size()], dk[u % dk.size()]);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return cells;
}

}  // namespace scatgate::sweep
