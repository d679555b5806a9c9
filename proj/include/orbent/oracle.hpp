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

// Independent numerical references for the closed formulas.

#include <array>
#include <span>
#include <string>

#include "orbent/entanglement.hpp"
#include "orbent/fock.hpp"
#include "orbent/ssr.hpp"

namespace orbent {

/// min_q sum_i p_i ln(p_i/q_i) over normalized q >= 0 subject to the active
/// sector constraints q10 q11 >= ((q8-q9)/2)^2 (M) and q1 q16 >= ((q6-q7)/2)^2
/// (M'). Weights outside the active sectors are unconstrained.
struct ConstrainedSimplexProblem {
  std::array<double, 16> p{};
  bool constrain_m = true;
  bool constrain_mprime = false;

  static ConstrainedSimplexProblem from_spectrum(const SectorSpectrum& spectrum, Ssr ssr);
};

struct OracleSettings {
  int max_iterations = 400;
  double feasibility_tol = 1e-12;
  double stationarity_tol = 1e-9;
};

struct OracleSolution {
  double value = 0.0;  // nats
  std::array<double, 16> q{};
  double feasibility_residual = 0.0;
  double stationarity_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string message;
};

OracleSolution kl_min_oracle(const ConstrainedSimplexProblem& problem,
                             const OracleSettings& settings = {});

/// sum_i p_i ln(p_i / q_i) with 0 ln 0 = 0.
double kl_divergence(std::span<const double> p, std::span<const double> q);

struct PptResult {
  bool is_ppt = false;
  double min_eigenvalue = 0.0;
};

inline constexpr double kPptThreshold = -1e-10;

PptResult ppt_oracle(const TwoOrbitalState& rho);

/// A two-qubit-like sector with a coherent pair block. `block` is the 2x2
/// density block on the pair states (e1, e2); p_u, p_v are the populations of
/// the two product states. Separable iff |block(0,1)|^2 <= q_u q_v.
struct CoherentSectorProblem {
  double p_u = 0.0;
  double p_v = 0.0;
  Eigen::Matrix2cd block = Eigen::Matrix2cd::Zero();
};

struct CoherentSectorSolution {
  double value = 0.0;
  double q_u = 0.0;
  double q_v = 0.0;
  Eigen::Matrix2cd block = Eigen::Matrix2cd::Zero();
  double feasibility_residual = 0.0;
  double stationarity_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Relative-entropy distance of one sector to the separable symmetric set,
/// allowing an arbitrary pair coherence.
CoherentSectorSolution coherent_sector_oracle(const CoherentSectorProblem& problem,
                                              const OracleSettings& settings = {});

struct CoherentEntanglement {
  double value = 0.0;
  bool converged = false;
  double stationarity_residual = 0.0;
};

/// Entanglement of an SSR-projected state that commutes with Sz and N but may
/// carry singlet-triplet (or pair) coherence. Sums the independent sectors.
CoherentEntanglement coherent_entanglement_oracle(const TwoOrbitalState& projected, Ssr ssr,
                                                  const OracleSettings& settings = {});

/// Pfaffian of a complex antisymmetric matrix.
Complex pfaffian(Eigen::MatrixXcd a);

/// Two-orbital state of a number-conserving Gaussian state on modes
/// (A up, A down, B up, B down) from C_ij = <c_i^dag c_j>, built entry by
/// entry from Wick contractions.
TwoOrbitalState wick_rdm_oracle(const Matrix4c& correlation);

}  // namespace orbent
