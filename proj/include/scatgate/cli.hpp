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

// Command-line front end. `main_entry` parses argv with CLI11 (optionally
// layered over a JSON config file) and `run` executes a validated RunConfig,
// writing CSV or JSON either to the configured path or to `out`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scatgate/sweep.hpp"
#include "scatgate/table_io.hpp"

namespace scatgate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

enum class Command { Sweep, Roots, Gate, Phases, Robustness, Verify };
enum class Format { Csv, Json };

std::string_view to_string(Command command);
Command parse_command(std::string_view name);

struct RunConfig {
  Command command = Command::Gate;

  std::vector<double> rho_j;
  std::vector<double> rho_g;
  std::optional<double> gamma_ratio;
  double kx0 = 3.14159265358979323846;
  double kx0_min = 0.0;
  double kx0_max = 3.14159265358979323846;
  std::size_t samples = 257;
  sweep::Channel channel = sweep::Channel::Transmission;
  std::optional<double> tol;
  std::size_t scan_points = sweep::kDefaultScanPoints;

  double range_rho_j = 20.0;
  double range_kx0 = 20.0;
  std::size_t points_rho_j = 41;
  std::size_t points_kx0 = 41;
  sweep::DeviationMode mode = sweep::DeviationMode::Percent;
  sweep::StatePreset state = sweep::StatePreset::UpDown;
  std::optional<std::string> svg;

  std::size_t draws = 1000;
  std::uint64_t seed = 20100601;

  std::optional<std::string> out;
  Format format = Format::Csv;

  /// Throws InvalidArgument describing the first problem found.
  void validate() const;
};

/// Reads a config object. Numeric fields accept numbers or strings such as
/// "2pi"; unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& json);

/// Executes the command. Returns one of the kExit* codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line entry point, argv[0] included.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Table builders, exposed for tests.
io::Table sweep_table(const std::vector<sweep::SweepRow>& rows);
io::Table roots_table(const std::vector<sweep::RootScan>& scans);
io::Table robustness_table(const std::vector<sweep::RobustnessCell>& cells,
                           const RunConfig& config);
io::Table phases_table(const RunConfig& config);
nlohmann::json table_to_json(const io::Table& table);
nlohmann::json gate_report_json(const GateReport& report);
std::string gate_report_text(const GateReport& report);
/// Minimal standalone SVG heatmap of a robustness grid.
std::string robustness_svg(const std::vector<sweep::RobustnessCell>& cells,
                           std::size_t rows, std::size_t cols);

}  // namespace scatgate::cli
