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

#include <string_view>

#include <json.hpp>

#include "orbent/fock.hpp"

namespace orbent {

/// Superselection rule: local particle number (N) or local parity (P).
enum class Ssr { kN, kP };

Ssr ssr_from_string(std::string_view name);
std::string_view to_string(Ssr ssr);
BasisVariant basis_variant(Ssr ssr);

/// Pinching onto blocks of fixed (N_A, N_B).
TwoOrbitalState nssr_project(const TwoOrbitalState& rho);
/// Pinching onto blocks of fixed local parities.
TwoOrbitalState pssr_project(const TwoOrbitalState& rho);
TwoOrbitalState ssr_project(const TwoOrbitalState& rho, Ssr ssr);

enum class TwirlGenerator { kSpinZ, kParticleNumber, kSpinSquared, kLocalNumber };

TwirlGenerator twirl_generator_from_string(std::string_view name);

/// Sum_q P_q rho P_q over the eigenspaces of the generator.
TwoOrbitalState twirl(const TwoOrbitalState& rho, TwirlGenerator generator);

struct SymmetryCheck {
  bool holds = false;
  double violation = 0.0;
};

struct SymmetryReport {
  double tolerance = 1e-10;
  SymmetryCheck particle_number;  // ||[rho, N]||_F
  SymmetryCheck spin_z;           // ||[rho, Sz]||_F
  SymmetryCheck spin_squared;     // ||[rho, S^2]||_F
  SymmetryCheck reflection;       // ||[rho, R]||_F for the orbital swap R
  SymmetryCheck p10_equals_p11;   // |p10 - p11|
  SymmetryCheck p1_equals_p16;    // |p1 - p16|
  Complex singlet_triplet_coherence;  // <Psi_8|rho|Psi_9>
  Complex pair_coherence;             // <Psi_6|rho|Psi_7>, parity basis
};

inline constexpr double kDefaultSymmetryTolerance = 1e-10;

SymmetryReport detect_symmetries(const TwoOrbitalState& rho,
                                 double tol = kDefaultSymmetryTolerance);

void to_json(nlohmann::json& j, const SymmetryReport& report);

enum class FormulaVariant { kNssrSinglet, kNssrGeneral, kPssrSymmetric, kPssrGeneral };

std::string_view to_string(FormulaVariant variant);

/// Most specific closed formula admissible for `report` (computed on the
/// SSR-projected state). Throws InsufficientSymmetry otherwise.
FormulaVariant select_formula(const SymmetryReport& report, Ssr ssr);

}  // namespace orbent
