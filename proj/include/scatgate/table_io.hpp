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

// Plain text tables for the CLI. Floats are written with 17 significant
// digits in the C locale so every value re-parses to the same bits.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace scatgate::io {

/// A header row plus string cells; numeric cells come from format_real().
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string format_real(double value);
/// Parses decimals and multiples of pi: "1.5", "pi", "-2pi", "0.5pi",
/// "3*pi", "pi/2", "3pi/4". Throws InvalidArgument on anything else.
double parse_real(std::string_view text);

/// RFC 4180 style: fields containing ',', '"' or newlines are quoted,
/// rows end in '\n'.
void write_csv(std::ostream& out, const Table& table);
Table read_csv(std::istream& in);

std::string to_csv(const Table& table);

}  // namespace scatgate::io
