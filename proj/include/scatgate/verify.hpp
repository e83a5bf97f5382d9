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

#include <cstdint>
#include <string>
#include <vector>

namespace scatgate {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;  ///< worst observed value of the checked quantity
  std::string detail;
};

struct VerifyOptions {
  std::size_t draws = 1000;
  std::uint64_t seed = 20100601;
};

/// Self-check battery behind `scatgate verify`: closed forms against the
/// transfer-matrix route on random draws plus the structural invariants of
/// every module. Deterministic for a given seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace scatgate
