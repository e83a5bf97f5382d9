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

#include "scatgate/scattering.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "scatgate/errors.hpp"

namespace scatgate {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// 2x2 wave-matching matrix mapping (A, B) of psi = A e^{ikx} + B e^{-ikx}
// on the left of a barrier at phase theta to the coefficients on its right.
using Matrix2c = std::array<std::array<Complex, 2>, 2>;

Matrix2c barrier_matrix(double theta, double strength) {
  const double beta = kPi * strength / 2.0;
  const Complex e2 = std::polar(1.0, 2.0 * theta);
  return {{{1.0 - kI * beta, -kI * beta / e2}, {kI * beta * e2, 1.0 + kI * beta}}};
}

Matrix2c multiply(const Matrix2c& a, const Matrix2c& b) {
  Matrix2c out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return out;
}

double xy_exchange(XyChannel channel, double rho_j) {
  switch (channel) {
    case XyChannel::Parallel:
      return 0.0;
    case XyChannel::PsiPlus:
      return rho_j / 2.0;
    case XyChannel::PsiMinus:
      return -rho_j / 2.0;
  }
  return 0.0;
}

}  // namespace

void DimensionlessParams::validate() const {
  if (!std::isfinite(rho_j) || !std::isfinite(rho_g) || !std::isfinite(kx0))
    throw InvalidArgument("dimensionless parameters must be finite");
  if (rho_g < 0.0) throw InvalidArgument("rho_g must be non-negative");
  if (kx0 <= 0.0) throw InvalidArgument("kx0 must be strictly positive");
}

BarrierChain::BarrierChain(std::vector<Barrier> barriers)
    : barriers_(std::move(barriers)) {
  if (barriers_.empty()) throw InvalidArgument("barrier chain is empty");
  for (std::size_t i = 0; i < barriers_.size(); ++i) {
    const auto& b = barriers_[i];
    if (!std::isfinite(b.position) || !std::isfinite(b.strength))
      throw InvalidArgument("barrier " + std::to_string(i) + " is not finite");
    if (i > 0 && !(b.position > barriers_[i - 1].position))
      throw InvalidArgument("barrier positions must be strictly increasing");
  }
}

double effective_potential(SpinSector sector, double rho_j) {
  const double s = sector == SpinSector::Singlet ? 0.0 : 1.0;
  return rho_j / 2.0 * (s * (s + 1.0) - 1.5);
}

ChannelAmplitudes single_barrier_amplitudes(double rho_v) {
  const Complex t = 4.0 / (4.0 + 2.0 * kI * kPi * rho_v);
  return {t, t - 1.0};
}

ChannelAmplitudes double_barrier_amplitudes(const DimensionlessParams& params,
                                            SpinSector sector) {
  const double v = kPi * effective_potential(sector, params.rho_j);
  const double g = kPi * params.rho_g;
  const Complex e2 = std::polar(1.0, 2.0 * params.kx0);

  const Complex t = 4.0 / (4.0 + 2.0 * kI * g + v * (2.0 * kI + (e2 - 1.0) * g));
  const Complex r = (v * (g - 2.0 * kI) - g * e2 * (v + 2.0 * kI)) * t / 4.0;
  return {t, r};
}

ChannelAmplitudes xy_channel_amplitudes(const DimensionlessParams& params,
                                        XyChannel channel) {
  const double exchange = xy_exchange(channel, params.rho_j);
  if (at_resonance(params.kx0))
    return single_barrier_amplitudes(params.rho_g + exchange);
  params.validate();
  return transfer_matrix_amplitudes(
      BarrierChain({{0.0, exchange}, {params.kx0, params.rho_g}}));
}

ChannelAmplitudes transfer_matrix_amplitudes(const BarrierChain& chain) {
  Matrix2c total{{{1.0, 0.0}, {0.0, 1.0}}};
  for (const auto& b : chain.barriers())
    total = multiply(barrier_matrix(b.position, b.strength), total);
  // Right side carries (t, 0), left side (1, r); det(total) == 1.
  const Complex t = 1.0 / total[1][1];
  const Complex r = -total[1][0] / total[1][1];
  return {t, r};
}

bool at_resonance(double kx0, double tol) {
  return std::abs(std::polar(1.0, 2.0 * kx0) - 1.0) < tol;
}

}  // namespace scatgate
