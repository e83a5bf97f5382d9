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

// Spin-sector scattering amplitudes for a flying spin-1/2 particle crossing
// a spin-1/2 impurity at x = 0 and a spinless delta barrier at x = x0.
//
// Everything is expressed through three dimensionless groups: the exchange
// strength rho*J, the barrier strength rho*Gamma (rho being the 1D density of
// states at the particle's energy) and the phase k*x0. A delta barrier of
// dimensionless strength v enters the wave matching through
// beta = pi * v / 2, so that a lone barrier transmits t = 1 / (1 + i beta).
//
// Phase convention: amplitudes are referred to the impurity site x = 0 for
// a unit wave incident from the left. With continuity of psi and the usual
// jump of psi' this gives r = t - 1 for a single barrier.

#include <complex>
#include <vector>

namespace scatgate {

using Complex = std::complex<double>;

/// The three controls that fully determine the scattering problem.
struct DimensionlessParams {
  double rho_j = 0.0;  ///< exchange coupling, rho * J
  double rho_g = 0.0;  ///< static barrier strength, rho * Gamma
  double kx0 = 0.0;    ///< barrier offset phase, k * x0 (radians)

  /// Throws InvalidArgument unless all fields are finite, rho_g >= 0 and
  /// kx0 > 0.
  void validate() const;
};

enum class SpinSector { Singlet, Triplet };

/// Transmission and reflection amplitude of one scattering channel.
struct ChannelAmplitudes {
  Complex t{1.0, 0.0};
  Complex r{0.0, 0.0};

  double transmission_probability() const { return std::norm(t); }
  double reflection_probability() const { return std::norm(r); }
};

struct Barrier {
  double position = 0.0;  ///< in units of 1/k (i.e. the phase k*x)
  double strength = 0.0;  ///< dimensionless rho * V
};

/// Ordered list of delta barriers with strictly increasing positions.
class BarrierChain {
 public:
  explicit BarrierChain(std::vector<Barrier> barriers);

  const std::vector<Barrier>& barriers() const noexcept { return barriers_; }

 private:
  std::vector<Barrier> barriers_;
};

/// Exchange term seen in a fixed total-spin sector: rho*J/2 [S(S+1) - 3/2].
double effective_potential(SpinSector sector, double rho_j);

/// Amplitudes for a single delta barrier of dimensionless strength rho_v.
ChannelAmplitudes single_barrier_amplitudes(double rho_v);

/// Closed-form amplitudes for the impurity (sector potential) at x = 0 plus
/// the static barrier at kx0. Accepts kx0 = 0 (merged barriers).
ChannelAmplitudes double_barrier_amplitudes(const DimensionlessParams& params,
                                            SpinSector sector);

/// Channels of the XY-coupled impurity model. |up up> and |down down> see no
/// exchange term, |Psi+-> see +-J/2.
enum class XyChannel { Parallel, PsiPlus, PsiMinus };

ChannelAmplitudes xy_channel_amplitudes(const DimensionlessParams& params,
                                        XyChannel channel);

/// Amplitudes of an arbitrary barrier chain by composing 2x2 wave-matching
/// matrices. Independent of the closed forms above; used to cross-check them.
ChannelAmplitudes transfer_matrix_amplitudes(const BarrierChain& chain);

/// True when exp(2 i kx0) == 1 within tol, i.e. kx0 is a multiple of pi.
bool at_resonance(double kx0, double tol = 1e-12);

}  // namespace scatgate
