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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbent/fock.hpp"
#include "orbent/ssr.hpp"

namespace orbent {

/// Diagonal weights of a projected state in the symmetry eigenbasis, plus the
/// two intra-sector coherences that the closed formulas assume vanish.
struct SectorSpectrum {
  BasisVariant variant = BasisVariant::kNssr;
  std::array<double, 16> weights{};  // weights[i-1] = <Psi_i|rho|Psi_i>
  Complex b;                          // <Psi_8|rho|Psi_9>
  Complex b_prime;                    // <Psi_6|rho|Psi_7> in the parity basis

  double p(int label) const { return weights[label - 1]; }
  double& p(int label) { return weights[label - 1]; }
};

/// `applied` is the rule that produced `projected`; it must match the basis.
SectorSpectrum sector_spectrum(const TwoOrbitalState& projected,
                               const SymmetryEigenbasis& basis, Ssr applied);

/// q10 q11 >= ((q8 - q9) / 2)^2.
bool is_separable_M(double p8, double p9, double p10, double p11);
/// q1 q16 >= ((q6 - q7) / 2)^2.
bool is_separable_Mprime(double p1, double p6, double p7, double p16);

enum class SectorMethod { kSeparable, kSymmetric, kGeneral, kCorner };

std::string_view to_string(SectorMethod method);

/// How one two-qubit-like sector was resolved. (A, B, C, s) are only set by
/// the general formula.
struct SectorDetail {
  SectorMethod method = SectorMethod::kSeparable;
  double value = 0.0;
  double r = 0.0;
  double t = 0.0;
  std::optional<std::array<double, 4>> general_coefficients;  // A, B, C, s
};

struct EntanglementResult {
  double value = 0.0;  // nats
  FormulaVariant variant = FormulaVariant::kNssrSinglet;
  std::array<double, 16> p{};
  std::array<double, 16> q_star{};
  SectorDetail sector_m;
  std::optional<SectorDetail> sector_mprime;
  bool spin_twirled = false;
  bool from_oracle = false;
};

inline constexpr double kFormulaTolerance = 1e-10;

/// Closed formula for p10 = p11 (global singlet).
EntanglementResult nssr_entanglement_singlet(const SectorSpectrum& spectrum,
                                             double tol = kFormulaTolerance);
/// Closed formula for reflection / total-spin symmetric states with
/// p10 != p11. Throws DegenerateSector for a rank-deficient, entangled sector.
EntanglementResult nssr_entanglement_general(const SectorSpectrum& spectrum,
                                             double tol = kFormulaTolerance);
/// Parity-rule entanglement: sectors M and M' contribute independently.
EntanglementResult pssr_entanglement(const SectorSpectrum& spectrum,
                                     double tol = kFormulaTolerance);

/// sigma* = sum_i q*_i |Psi_i><Psi_i| in the basis matching the result.
TwoOrbitalState closest_separable_state(const EntanglementResult& result);

struct EvaluationOptions {
  Ssr ssr = Ssr::kN;
  double tol = kDefaultSymmetryTolerance;
  /// Remove a real singlet-triplet coherence by the total-spin twirl before
  /// evaluating. Changes the state; reported in the result.
  bool spin_twirl = false;
  /// Use the constrained-minimization oracle for degenerate sectors.
  bool oracle_fallback = false;
};

/// Project, detect symmetries, select the formula variant and evaluate.
EntanglementResult evaluate_entanglement(const TwoOrbitalState& rho,
                                         const EvaluationOptions& options = {});

TwoOrbitalState closest_separable_state(const TwoOrbitalState& rho,
                                        const EvaluationOptions& options = {});

/// S(rho_AB || rho_A (x) rho_B).
double mutual_information(const TwoOrbitalState& rho);
/// S(sigma* || rho_A (x) rho_B), sigma* the closest separable state.
double classical_correlation(const TwoOrbitalState& rho,
                             const EvaluationOptions& options = {});

Matrix16 product_of_marginals(const TwoOrbitalState& rho);

struct PairEntanglement {
  std::size_t index = 0;
  std::optional<double> value;
  std::optional<FormulaVariant> variant;
  bool from_oracle = false;
  std::string error;
};

struct SeniorityCost {
  double total = 0.0;
  std::vector<PairEntanglement> pairs;
  bool partial = false;  // some pairs failed and are missing from `total`
};

/// Sum of pair entanglements; failures are recorded per pair.
SeniorityCost seniority_cost(std::span<const TwoOrbitalState> pair_states,
                             const EvaluationOptions& options = {});

void to_json(nlohmann::json& j, const SectorSpectrum& spectrum);
void to_json(nlohmann::json& j, const EntanglementResult& result);

}  // namespace orbent
