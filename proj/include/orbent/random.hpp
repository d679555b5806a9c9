// Copyright 2026 The orbent Authors
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

// Seeded generators for test and verification states.

#include <array>
#include <cstdint>
#include <random>

#include "orbent/entanglement.hpp"
#include "orbent/fock.hpp"

namespace orbent {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Uniform point on the probability simplex (flat Dirichlet).
template <std::size_t N>
std::array<double, N> random_simplex(Rng& rng) {
  std::exponential_distribution<double> exp(1.0);
  std::array<double, N> w{};
  double sum = 0.0;
  for (double& x : w) sum += (x = exp(rng));
  for (double& x : w) x /= sum;
  return w;
}

/// Spectrum in the N-SSR basis with p10 = p11 and b = 0.
SectorSpectrum random_singlet_spectrum(Rng& rng);
/// Spectrum in the N-SSR basis with all sector-M weights strictly positive.
SectorSpectrum random_general_spectrum(Rng& rng);
/// Spectrum in the parity basis; `symmetric` forces p1 = p16, p10 = p11.
SectorSpectrum random_pssr_spectrum(Rng& rng, bool symmetric);

/// sum_i p_i |Psi_i><Psi_i| in the spectrum's basis.
TwoOrbitalState state_from_spectrum(const SectorSpectrum& spectrum);

/// State commuting with Sz and the local numbers, with a random complex
/// coherence between |up,down> and |down,up>.
TwoOrbitalState random_coherent_symmetric_state(Rng& rng);
/// State diagonal in the parity basis: total-spin, particle-number and Sz
/// symmetric with no pair coherence, so both formula families apply.
TwoOrbitalState random_dual_rule_state(Rng& rng);
/// Convex mixture of random product states with fixed local particle
/// numbers, twirled over Sz. Separable by construction.
TwoOrbitalState random_symmetric_separable_state(Rng& rng, int n_terms = 6);

/// Random pure total-spin singlet on `n_orbitals` orbitals with
/// `n_electrons` electrons, in product order.
Eigen::VectorXcd random_singlet(Rng& rng, int n_orbitals, int n_electrons);

}  // namespace orbent
