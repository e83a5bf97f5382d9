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

#include <stdexcept>
#include <string>

namespace scatgate {

/// Raised when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when post-selection on a channel is impossible because its
/// probability is numerically zero.
class VanishingProbability : public std::runtime_error {
 public:
  explicit VanishingProbability(double probability)
      : std::runtime_error("channel probability vanishes (p = " +
                           std::to_string(probability) + ")"),
        probability_(probability) {}

  double probability() const noexcept { return probability_; }

 private:
  double probability_;
};

}  // namespace scatgate
