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

#include "scatgate/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "scatgate/errors.hpp"
#include "scatgate/gates.hpp"
#include "scatgate/verify.hpp"

namespace scatgate::cli {

namespace {

using nlohmann::json;
using io::format_real;

constexpr double kPi = std::numbers::pi;

std::string format_complex(Complex z) {
  std::string s = format_real(z.real());
  const std::string im = format_real(z.imag());
  s += (im.front() == '-' ? "" : "+") + im + "i";
  return s;
}

std::optional<double> parse_number_cell(const std::string& cell) {
  if (cell == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) return std::nullopt;
  return v;
}

double json_real(const json& v, const std::string& key) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return io::parse_real(v.get<std::string>());
  throw InvalidArgument("config field '" + key + "' must be a number");
}

std::vector<double> json_reals(const json& v, const std::string& key) {
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& e : v) out.push_back(json_real(e, key));
  } else {
    out.push_back(json_real(v, key));
  }
  return out;
}

std::size_t json_count(const json& v, const std::string& key) {
  if (!v.is_number_unsigned()) throw InvalidArgument("config field '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string json_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw InvalidArgument("config field '" + key + "' must be a string");
  return v.get<std::string>();
}

sweep::DeviationMode parse_mode(std::string_view s) {
  if (s == "percent") return sweep::DeviationMode::Percent;
  if (s == "absolute") return sweep::DeviationMode::Absolute;
  throw InvalidArgument("unknown deviation mode '" + std::string(s) + "'");
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw InvalidArgument("unknown output format '" + std::string(s) + "'");
}

double single_rho_j(const RunConfig& c) {
  if (c.rho_j.size() != 1) throw InvalidArgument("this command takes exactly one rho_j value");
  return c.rho_j.front();
}

DimensionlessParams point_params(const RunConfig& c) {
  const double j = single_rho_j(c);
  double g = 0.0;
  if (c.gamma_ratio) {
    if (!c.rho_g.empty()) throw InvalidArgument("give either rho_g or gamma_ratio, not both");
    g = *c.gamma_ratio * j;
  } else if (c.rho_g.size() == 1) {
    g = c.rho_g.front();
  } else {
    throw InvalidArgument("this command needs one rho_g value or a gamma_ratio");
  }
  DimensionlessParams p{j, g, c.kx0};
  p.validate();
  return p;
}

sweep::SweepSpec sweep_spec(const RunConfig& c) {
  sweep::SweepSpec spec;
  spec.rho_j = c.rho_j;
  spec.rho_g = c.rho_g;
  spec.gamma_ratio = c.gamma_ratio;
  spec.kx0_lo = c.kx0_min;
  spec.kx0_hi = c.kx0_max;
  spec.samples = c.samples;
  spec.channel = c.channel;
  spec.validate();
  return spec;
}

sweep::RobustnessSpec robustness_spec(const RunConfig& c) {
  sweep::RobustnessSpec spec;
  RunConfig defaults = c;
  if (defaults.rho_j.empty()) defaults.rho_j = {4.0 / kPi};
  if (!defaults.gamma_ratio && defaults.rho_g.empty()) defaults.gamma_ratio = 0.25;
  spec.base = point_params(defaults);
  spec.rho_j_range = c.range_rho_j;
  spec.kx0_range = c.range_kx0;
  spec.rho_j_points = c.points_rho_j;
  spec.kx0_points = c.points_kx0;
  spec.mode = c.mode;
  spec.initial_state = sweep::preset_state(c.state);
  spec.channel = c.channel;
  spec.validate();
  return spec;
}

std::string matrix_text(const Matrix4c& m, std::string_view indent) {
  std::ostringstream s;
  for (int i = 0; i < 4; ++i) {
    s << indent << "[";
    for (int j = 0; j < 4; ++j) s << (j ? ", " : " ") << format_complex(m(i, j));
    s << " ]\n";
  }
  return s.str();
}

json matrix_json(const SpinOperator4& op) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back({op.entries(i, j).real(), op.entries(i, j).imag()});
    rows.push_back(row);
  }
  return {{"basis", std::string(to_string(op.basis))}, {"entries", rows}};
}

io::Table gate_report_table(const GateReport& r) {
  io::Table t{{"key", "value"}, {}};
  auto add = [&t](std::string k, std::string v) { t.rows.push_back({std::move(k), std::move(v)}); };
  add("rho_j", format_real(r.params.rho_j));
  add("rho_g", format_real(r.params.rho_g));
  add("kx0", format_real(r.params.kx0));
  add("t0", format_complex(r.singlet.t));
  add("t1", format_complex(r.triplet.t));
  add("r0", format_complex(r.singlet.r));
  add("r1", format_complex(r.triplet.r));
  add("residual", format_real(r.residual));
  add("is_gate", r.is_gate ? "true" : "false");
  add("phi_t", format_real(r.phi_t));
  add("phi_r", format_real(r.phi_r));
  add("p_t", format_real(r.p_t));
  add("p_r", format_real(r.p_r));
  add("max_entangling_t", r.max_entangling_t ? "true" : "false");
  add("max_entangling_r", r.max_entangling_r ? "true" : "false");
  auto add_gate = [&](const std::optional<PhaseGate>& g, const std::string& name) {
    if (!g) {
      add(name, "undefined");
      return;
    }
    for (const auto* op : {&g->coupled, &g->computational})
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          add(name + "." + std::string(to_string(op->basis)) + "[" + std::to_string(i) + "][" +
                  std::to_string(j) + "]",
              format_complex(op->entries(i, j)));
  };
  add_gate(r.gate_t, "gate_t");
  add_gate(r.gate_r, "gate_r");
  return t;
}

void emit(const RunConfig& c, std::ostream& out, const io::Table& table,
          const std::function<json()>& as_json) {
  std::string text;
  if (c.format == Format::Csv) {
    text = io::to_csv(table);
  } else {
    text = as_json().dump(2) + "\n";
  }
  if (!c.out) {
    out << text;
    return;
  }
  const std::filesystem::path path(*c.out);
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file '" + *c.out + "'");
  file << text;
}

void write_text_file(const std::string& path_text, const std::string& content) {
  const std::filesystem::path path(path_text);
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file '" + path_text + "'");
  file << content;
}

int run_command(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::Sweep: {
      const auto table = sweep_table(sweep::residual_sweep(sweep_spec(c)));
      emit(c, out, table, [&] { return table_to_json(table); });
      return kExitOk;
    }
    case Command::Roots: {
      const auto scans = sweep::find_gate_roots(sweep_spec(c), c.tol.value_or(kRootGateTol), c.scan_points);
      const auto table = roots_table(scans);
      emit(c, out, table, [&] { return table_to_json(table); });
      return kExitOk;
    }
    case Command::Gate: {
      const auto report = synthesize_gates(point_params(c), c.tol.value_or(kAnalyticGateTol));
      out << gate_report_text(report);
      if (c.out) emit(c, out, gate_report_table(report), [&] { return gate_report_json(report); });
      return kExitOk;
    }
    case Command::Phases: {
      const auto table = phases_table(c);
      emit(c, out, table, [&] { return table_to_json(table); });
      return kExitOk;
    }
    case Command::Robustness: {
      const auto spec = robustness_spec(c);
      const auto cells = sweep::robustness_grid(spec);
      const auto table = robustness_table(cells, c);
      emit(c, out, table, [&] { return table_to_json(table); });
      if (c.svg) write_text_file(*c.svg, robustness_svg(cells, spec.rho_j_points, spec.kx0_points));
      int status = kExitOk;
      for (const auto& cell : cells)
        if (!cell.fidelity) {
          err << "error: channel probability vanishes at delta_rho_j=" << format_real(cell.delta_rho_j)
              << " delta_kx0=" << format_real(cell.delta_kx0) << "\n";
          status = kExitData;
        }
      return status;
    }
    case Command::Verify: {
      const auto results = run_verification({c.draws, c.seed});
      io::Table table{{"check", "passed", "worst", "detail"}, {}};
      bool ok = true;
      for (const auto& r : results) {
        ok = ok && r.passed;
        table.rows.push_back({r.name, r.passed ? "true" : "false", format_real(r.worst), r.detail});
        if (!c.out) continue;
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
      }
      emit(c, out, table, [&] { return table_to_json(table); });
      return ok ? kExitOk : kExitCheckFailed;
    }
  }
  return kExitUsage;
}

}  // namespace

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Sweep:
      return "sweep";
    case Command::Roots:
      return "roots";
    case Command::Gate:
      return "gate";
    case Command::Phases:
      return "phases";
    case Command::Robustness:
      return "robustness";
    case Command::Verify:
      return "verify";
  }
  return "";
}

Command parse_command(std::string_view name) {
  for (auto c : {Command::Sweep, Command::Roots, Command::Gate, Command::Phases,
                 Command::Robustness, Command::Verify})
    if (name == to_string(c)) return c;
  throw InvalidArgument("unknown command '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  if (tol && !(*tol > 0.0)) throw InvalidArgument("tol must be positive");
  switch (command) {
    case Command::Sweep:
    case Command::Roots:
      sweep_spec(*this);
      if (scan_points < 2) throw InvalidArgument("scan_points must be at least 2");
      break;
    case Command::Gate:
      point_params(*this);
      break;
    case Command::Phases:
      for (double j : rho_j)
        if (!(j > 0.0) || !std::isfinite(j)) throw InvalidArgument("phases needs rho_j > 0");
      if (!(kx0 > 0.0) || !std::isfinite(kx0)) throw InvalidArgument("kx0 must be positive");
      break;
    case Command::Robustness:
      robustness_spec(*this);
      break;
    case Command::Verify:
      if (draws == 0) throw InvalidArgument("draws must be positive");
      break;
  }
}

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  RunConfig c;
  for (const auto& [key, v] : j.items()) {
    if (key == "command") c.command = parse_command(json_string(v, key));
    else if (key == "rho_j") c.rho_j = json_reals(v, key);
    else if (key == "rho_g") c.rho_g = json_reals(v, key);
    else if (key == "gamma_ratio") c.gamma_ratio = json_real(v, key);
    else if (key == "kx0") c.kx0 = json_real(v, key);
    else if (key == "kx0_min") c.kx0_min = json_real(v, key);
    else if (key == "kx0_max") c.kx0_max = json_real(v, key);
    else if (key == "samples") c.samples = json_count(v, key);
    else if (key == "channel") c.channel = sweep::parse_channel(json_string(v, key));
    else if (key == "tol") c.tol = json_real(v, key);
    else if (key == "scan_points") c.scan_points = json_count(v, key);
    else if (key == "range_rho_j") c.range_rho_j = json_real(v, key);
    else if (key == "range_kx0") c.range_kx0 = json_real(v, key);
    else if (key == "points_rho_j") c.points_rho_j = json_count(v, key);
    else if (key == "points_kx0") c.points_kx0 = json_count(v, key);
    else if (key == "mode") c.mode = parse_mode(json_string(v, key));
    else if (key == "state") c.state = sweep::parse_state_preset(json_string(v, key));
    else if (key == "svg") c.svg = json_string(v, key);
    else if (key == "draws") c.draws = json_count(v, key);
    else if (key == "seed") c.seed = json_count(v, key);
    else if (key == "out") c.out = json_string(v, key);
    else if (key == "format") c.format = parse_format(json_string(v, key));
    else throw InvalidArgument("unknown config field '" + key + "'");
  }
  return c;
}

io::Table sweep_table(const std::vector<sweep::SweepRow>& rows) {
  io::Table t{{"kx0", "rho_j", "rho_g", "abs_t0", "abs_t1", "abs_r0", "abs_r1", "residual",
               "phi_t", "phi_r"},
              {}};
  t.rows.reserve(rows.size());
  for (const auto& r : rows)
    t.rows.push_back({format_real(r.kx0), format_real(r.rho_j), format_real(r.rho_g),
                      format_real(r.abs_t0), format_real(r.abs_t1), format_real(r.abs_r0),
                      format_real(r.abs_r1), format_real(r.residual), format_real(r.phi_t),
                      format_real(r.phi_r)});
  return t;
}

io::Table roots_table(const std::vector<sweep::RootScan>& scans) {
  io::Table t{{"rho_j", "rho_g", "kx0_root", "residual", "phi_t", "phi_r", "p_t", "p_r",
               "is_gate", "identically_zero"},
              {}};
  for (const auto& s : scans) {
    if (s.identically_zero) {
      t.rows.push_back({format_real(s.rho_j), format_real(s.rho_g), "", "0", "", "", "", "",
                        "true", "true"});
      continue;
    }
    for (const auto& root : s.roots) {
      const auto& r = root.report;
      t.rows.push_back({format_real(s.rho_j), format_real(s.rho_g), format_real(root.kx0_root),
                        format_real(r.residual), format_real(r.phi_t), format_real(r.phi_r),
                        format_real(r.p_t), format_real(r.p_r), r.is_gate ? "true" : "false",
                        "false"});
    }
  }
  return t;
}

io::Table robustness_table(const std::vector<sweep::RobustnessCell>& cells,
                           const RunConfig& config) {
  const bool pct = config.mode == sweep::DeviationMode::Percent;
  io::Table t{{pct ? "delta_rho_j_pct" : "delta_rho_j_abs", pct ? "delta_kx0_pct" : "delta_kx0_abs",
               "fidelity", "success_prob", "channel", "state_preset"},
              {}};
  const std::string channel(sweep::to_string(config.channel));
  const std::string preset(sweep::to_string(config.state));
  for (const auto& c : cells)
    t.rows.push_back({format_real(c.delta_rho_j), format_real(c.delta_kx0),
                      c.fidelity ? format_real(*c.fidelity) : "undefined",
                      format_real(c.success_prob), channel, preset});
  return t;
}

io::Table phases_table(const RunConfig& config) {
  std::vector<double> values = config.rho_j;
  if (values.empty())
    for (int i = 0; i < 25; ++i) values.push_back(0.1 * std::pow(100.0, i / 24.0));
  io::Table t{{"rho_j", "rho_g", "kx0", "phi_t_closed", "phi_r_closed", "phi_t", "phi_r",
               "phi_t_minus_phi_r"},
              {}};
  for (double j : values) {
    const auto closed = rc_phases(j);
    const auto rep = synthesize_gates({j, j / 4.0, config.kx0}, config.tol.value_or(kAnalyticGateTol));
    t.rows.push_back({format_real(j), format_real(j / 4.0), format_real(config.kx0),
                      format_real(closed.phi_t), format_real(closed.phi_r), format_real(rep.phi_t),
                      format_real(rep.phi_r), format_real(wrap_phase(rep.phi_t - rep.phi_r))});
  }
  return t;
}

json table_to_json(const io::Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const auto& cell : row) {
      if (const auto v = parse_number_cell(cell)) {
        if (std::isnan(*v))
          r.push_back(nullptr);
        else
          r.push_back(*v);
      } else if (cell == "true" || cell == "false") {
        r.push_back(cell == "true");
      } else if (cell.empty() || cell == "undefined") {
        r.push_back(nullptr);
      } else {
        r.push_back(cell);
      }
    }
    rows.push_back(std::move(r));
  }
  return {{"columns", table.header}, {"rows", rows}};
}

json gate_report_json(const GateReport& r) {
  auto amp = [](Complex z) { return json::array({z.real(), z.imag()}); };
  json j = {{"params", {{"rho_j", r.params.rho_j}, {"rho_g", r.params.rho_g}, {"kx0", r.params.kx0}}},
            {"t0", amp(r.singlet.t)},
            {"t1", amp(r.triplet.t)},
            {"r0", amp(r.singlet.r)},
            {"r1", amp(r.triplet.r)},
            {"residual", r.residual},
            {"is_gate", r.is_gate},
            {"phi_t", r.phi_t},
            {"phi_r", r.phi_r},
            {"p_t", r.p_t},
            {"p_r", r.p_r},
            {"max_entangling_t", r.max_entangling_t},
            {"max_entangling_r", r.max_entangling_r}};
  auto gate = [&](const std::optional<PhaseGate>& g) -> json {
    if (!g) return nullptr;
    return {{"coupled", matrix_json(g->coupled)}, {"computational", matrix_json(g->computational)}};
  };
  j["gate_t"] = gate(r.gate_t);
  j["gate_r"] = gate(r.gate_r);
  return j;
}

std::string gate_report_text(const GateReport& r) {
  std::ostringstream s;
  s << "rho_j    " << format_real(r.params.rho_j) << "\n"
    << "rho_g    " << format_real(r.params.rho_g) << "\n"
    << "kx0      " << format_real(r.params.kx0) << "\n"
    << "t0       " << format_complex(r.singlet.t) << "\n"
    << "t1       " << format_complex(r.triplet.t) << "\n"
    << "r0       " << format_complex(r.singlet.r) << "\n"
    << "r1       " << format_complex(r.triplet.r) << "\n"
    << "residual " << format_real(r.residual) << "\n"
    << "is_gate  " << (r.is_gate ? "yes" : "no") << "\n"
    << "phi_t    " << format_real(r.phi_t) << "\n"
    << "phi_r    " << format_real(r.phi_r) << "\n"
    << "p_t      " << format_real(r.p_t) << "\n"
    << "p_r      " << format_real(r.p_r) << "\n"
    << "max entangling: transmission " << (r.max_entangling_t ? "yes" : "no") << ", reflection "
    << (r.max_entangling_r ? "yes" : "no") << "\n";
  auto gate = [&](const std::optional<PhaseGate>& g, std::string_view name) {
    if (!g) {
      s << name << " gate: undefined\n";
      return;
    }
    s << name << " gate, coupled basis {|Psi->, |uu>, |Psi+>, |dd>}:\n"
      << matrix_text(g->coupled.entries, "  ")
      << name << " gate, computational basis {|uu>, |ud>, |du>, |dd>}:\n"
      << matrix_text(g->computational.entries, "  ");
  };
  gate(r.gate_t, "transmission");
  gate(r.gate_r, "reflection");
  return s.str();
}

std::string robustness_svg(const std::vector<sweep::RobustnessCell>& cells, std::size_t rows,
                           std::size_t cols) {
  constexpr int cell = 10;
  const auto w = static_cast<int>(cols) * cell;
  const auto h = static_cast<int>(rows) * cell;
  double lo = 1.0;
  for (const auto& c : cells)
    if (c.fidelity) lo = std::min(lo, *c.fidelity);
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
    << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto row = i / cols;
    const auto col = i % cols;
    std::string fill = "#ff00ff";
    if (cells[i].fidelity) {
      const double u = lo < 1.0 ? (*cells[i].fidelity - lo) / (1.0 - lo) : 1.0;
      const int level = static_cast<int>(std::lround(255.0 * std::clamp(u, 0.0, 1.0)));
      char buf[8];
      std::snprintf(buf, sizeof buf, "#%02x%02x%02x", level, level, 255 - level / 2);
      fill = buf;
    }
    // delta_rho_j grows upward, delta_kx0 to the right.
    s << "<rect x=\"" << col * cell << "\" y=\"" << (rows - 1 - row) * cell << "\" width=\"" << cell
      << "\" height=\"" << cell << "\" fill=\"" << fill << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    return run_command(config, out, err);
  } catch (const VanishingProbability& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin-dependent scattering gates between a flying and a static qubit"};
  app.require_subcommand(1);

  struct Flags {
    std::string config;
    std::vector<std::string> rho_j, rho_g;
    std::string gamma_ratio, kx0, kx0_min, kx0_max, tol, range_rho_j, range_kx0;
    std::size_t samples = 0, scan_points = 0, points_rho_j = 0, points_kx0 = 0, draws = 0;
    std::uint64_t seed = 0;
    std::string channel, mode, state, svg, out, format;
  } f;

  std::vector<std::pair<CLI::Option*, std::function<void(RunConfig&)>>> setters;
  auto reals = [](const std::vector<std::string>& v) {
    std::vector<double> out;
    for (const auto& s : v) out.push_back(io::parse_real(s));
    return out;
  };

  std::map<CLI::App*, Command> commands;
  auto add = [&](Command cmd, const std::string& help) {
    auto* sub = app.add_subcommand(std::string(to_string(cmd)), help);
    commands[sub] = cmd;
    sub->add_option("--config", f.config, "JSON config file; flags override its fields");
    setters.emplace_back(sub->add_option("--out,-o", f.out, "output path (default stdout)"),
                         [&](RunConfig& c) { c.out = f.out; });
    setters.emplace_back(sub->add_option("--format", f.format, "csv or json"),
                         [&](RunConfig& c) { c.format = parse_format(f.format); });
    return sub;
  };
  auto point_opts = [&](CLI::App* sub, bool many) {
    auto* o = sub->add_option("--rho-j", f.rho_j, "rho*J value(s)");
    if (many) o->delimiter(',');
    setters.emplace_back(o, [&](RunConfig& c) { c.rho_j = reals(f.rho_j); });
    auto* g = sub->add_option("--rho-g", f.rho_g, "rho*Gamma value(s)");
    if (many) g->delimiter(',');
    setters.emplace_back(g, [&](RunConfig& c) { c.rho_g = reals(f.rho_g); });
    setters.emplace_back(sub->add_option("--gamma-ratio", f.gamma_ratio, "Gamma/J"),
                         [&](RunConfig& c) { c.gamma_ratio = io::parse_real(f.gamma_ratio); });
  };
  auto channel_opt = [&](CLI::App* sub) {
    setters.emplace_back(sub->add_option("--channel", f.channel, "transmission or reflection"),
                         [&](RunConfig& c) { c.channel = sweep::parse_channel(f.channel); });
  };
  auto tol_opt = [&](CLI::App* sub) {
    setters.emplace_back(sub->add_option("--tol", f.tol, "gate condition tolerance"),
                         [&](RunConfig& c) { c.tol = io::parse_real(f.tol); });
  };
  auto kx0_opt = [&](CLI::App* sub) {
    setters.emplace_back(sub->add_option("--kx0", f.kx0, "k*x0, decimals or multiples of pi"),
                         [&](RunConfig& c) { c.kx0 = io::parse_real(f.kx0); });
  };
  auto range_opts = [&](CLI::App* sub) {
    setters.emplace_back(sub->add_option("--kx0-min", f.kx0_min, "sweep start"),
                         [&](RunConfig& c) { c.kx0_min = io::parse_real(f.kx0_min); });
    setters.emplace_back(sub->add_option("--kx0-max", f.kx0_max, "sweep end"),
                         [&](RunConfig& c) { c.kx0_max = io::parse_real(f.kx0_max); });
  };

  auto* sweep_cmd = add(Command::Sweep, "residual |t0|-|t1| over a kx0 range");
  point_opts(sweep_cmd, true);
  range_opts(sweep_cmd);
  channel_opt(sweep_cmd);
  setters.emplace_back(sweep_cmd->add_option("--samples", f.samples, "kx0 samples"),
                       [&](RunConfig& c) { c.samples = f.samples; });

  auto* roots_cmd = add(Command::Roots, "gate points by bracketing root search over kx0");
  point_opts(roots_cmd, true);
  range_opts(roots_cmd);
  tol_opt(roots_cmd);
  setters.emplace_back(roots_cmd->add_option("--scan-points", f.scan_points, "scan grid per period"),
                       [&](RunConfig& c) { c.scan_points = f.scan_points; });

  auto* gate_cmd = add(Command::Gate, "gate report at one parameter point");
  point_opts(gate_cmd, false);
  kx0_opt(gate_cmd);
  tol_opt(gate_cmd);

  auto* phases_cmd = add(Command::Phases, "resonant gate phases, closed form and numeric");
  auto* pj = phases_cmd->add_option("--rho-j", f.rho_j, "rho*J values")->delimiter(',');
  setters.emplace_back(pj, [&](RunConfig& c) { c.rho_j = reals(f.rho_j); });
  kx0_opt(phases_cmd);

  auto* rob_cmd = add(Command::Robustness, "fidelity grid around an ideal gate");
  point_opts(rob_cmd, false);
  kx0_opt(rob_cmd);
  channel_opt(rob_cmd);
  setters.emplace_back(rob_cmd->add_option("--range-rho-j", f.range_rho_j, "half-width of the rho_j axis"),
                       [&](RunConfig& c) { c.range_rho_j = io::parse_real(f.range_rho_j); });
  setters.emplace_back(rob_cmd->add_option("--range-kx0", f.range_kx0, "half-width of the kx0 axis"),
                       [&](RunConfig& c) { c.range_kx0 = io::parse_real(f.range_kx0); });
  setters.emplace_back(rob_cmd->add_option("--points-rho-j", f.points_rho_j, "rho_j grid size"),
                       [&](RunConfig& c) { c.points_rho_j = f.points_rho_j; });
  setters.emplace_back(rob_cmd->add_option("--points-kx0", f.points_kx0, "kx0 grid size"),
                       [&](RunConfig& c) { c.points_kx0 = f.points_kx0; });
  setters.emplace_back(rob_cmd->add_option("--mode", f.mode, "percent or absolute"),
                       [&](RunConfig& c) { c.mode = parse_mode(f.mode); });
  setters.emplace_back(rob_cmd->add_option("--state", f.state, "up_down, superposition or product_y"),
                       [&](RunConfig& c) { c.state = sweep::parse_state_preset(f.state); });
  setters.emplace_back(rob_cmd->add_option("--svg", f.svg, "also write an SVG heatmap"),
                       [&](RunConfig& c) { c.svg = f.svg; });

  auto* verify_cmd = add(Command::Verify, "run the self-check battery");
  setters.emplace_back(verify_cmd->add_option("--draws", f.draws, "random draws"),
                       [&](RunConfig& c) { c.draws = f.draws; });
  setters.emplace_back(verify_cmd->add_option("--seed", f.seed, "random seed"),
                       [&](RunConfig& c) { c.seed = f.seed; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    RunConfig config;
    if (!f.config.empty()) {
      std::ifstream in(f.config);
      if (!in) throw InvalidArgument("cannot read config file '" + f.config + "'");
      json j;
      try {
        j = json::parse(in);
      } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
      }
      config = config_from_json(j);
      if (j.contains("command") && config.command != commands.at(sub))
        throw InvalidArgument("config command does not match the subcommand");
    }
    config.command = commands.at(sub);
    for (const auto& [opt, apply] : setters)
      if (opt->count() > 0) apply(config);
    return run(config, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace scatgate::cli
