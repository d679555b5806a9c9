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

#include "orbent/ssr.hpp"

#include <cmath>
#include <functional>

namespace orbent {

namespace {

Matrix16 pinch_by_key(const Matrix16& rho, const std::function<int(int)>& key) {
  Matrix16 out = Matrix16::Zero();
  for (int i = 0; i < kPairDim; ++i)
    for (int j = 0; j < kPairDim; ++j)
      if (key(i) == key(j)) out(i, j) = rho(i, j);
  return out;
}

// Pinching with projectors onto the S^2 eigenspaces (|S| = 0, 1/2, 1).
Matrix16 pinch_total_spin(const Matrix16& rho) {
  const SymmetryEigenbasis& basis = nssr_basis();
  Matrix16 out = Matrix16::Zero();
  for (double spin : {0.0, 0.5, 1.0}) {
    Matrix16 projector = Matrix16::Zero();
    for (int i = 1; i <= 16; ++i)
      if (basis.label(i).spin == spin)
        projector += basis.vector(i) * basis.vector(i).adjoint();
    out += projector * rho * projector;
  }
  return out;
}

int local_number_key(int index) {
  const OccupationLabel q = occupation_label(index);
  return 3 * q.n_a + q.n_b;
}

int local_parity_key(int index) {
  const OccupationLabel q = occupation_label(index);
  return 2 * (q.n_a % 2) + q.n_b % 2;
}

TwoOrbitalState make_state(const Matrix16& m) {
  return TwoOrbitalState::from_matrix(m, StateTolerances{1e-11, 1e-11, -1e-10});
}

double expectation(const TwoOrbitalState& rho, const Vector16& v) {
  return (v.adjoint() * rho.matrix() * v)(0, 0).real();
}

SymmetryCheck check(double violation, double tol) {
  return {violation <= tol, violation};
}

}  // namespace

Ssr ssr_from_string(std::string_view name) {
  if (name == "N" || name == "n") return Ssr::kN;
  if (name == "P" || name == "p") return Ssr::kP;
  throw InvalidArgument("unknown superselection rule '" + std::string(name) +
                        "' (expected N or P)");
}

std::string_view to_string(Ssr ssr) { return ssr == Ssr::kN ? "N" : "P"; }

BasisVariant basis_variant(Ssr ssr) {
  return ssr == Ssr::kN ? BasisVariant::kNssr : BasisVariant::kPssr;
}

TwoOrbitalState nssr_project(const TwoOrbitalState& rho) {
  return make_state(pinch_by_key(rho.matrix(), local_number_key));
}

TwoOrbitalState pssr_project(const TwoOrbitalState& rho) {
  return make_state(pinch_by_key(rho.matrix(), local_parity_key));
}

TwoOrbitalState ssr_project(const TwoOrbitalState& rho, Ssr ssr) {
  return ssr == Ssr::kN ? nssr_project(rho) : pssr_project(rho);
}

TwirlGenerator twirl_generator_from_string(std::string_view name) {
  if (name == "Sz") return TwirlGenerator::kSpinZ;
  if (name == "N") return TwirlGenerator::kParticleNumber;
  if (name == "S2") return TwirlGenerator::kSpinSquared;
  if (name == "localN") return TwirlGenerator::kLocalNumber;
  throw InvalidArgument("unsupported twirl generator '" + std::string(name) + "'");
}

TwoOrbitalState twirl(const TwoOrbitalState& rho, TwirlGenerator generator) {
  switch (generator) {
    case TwirlGenerator::kSpinZ:
      return make_state(pinch_by_key(rho.matrix(), [](int i) {
        return static_cast<int>(std::lround(2.0 * occupation_label(i).sz));
      }));
    case TwirlGenerator::kParticleNumber:
      return make_state(
          pinch_by_key(rho.matrix(), [](int i) { return occupation_label(i).n; }));
    case TwirlGenerator::kLocalNumber:
      return nssr_project(rho);
    case TwirlGenerator::kSpinSquared:
      return make_state(pinch_total_spin(rho.matrix()));
  }
  throw InvalidArgument("unsupported twirl generator");
}

SymmetryReport detect_symmetries(const TwoOrbitalState& rho, double tol) {
  static const Matrix16 number = build_operator(Observable::kParticleNumber).matrix;
  static const Matrix16 spin_z = build_operator(Observable::kSpinZ).matrix;
  static const Matrix16 spin_sq = build_operator(Observable::kSpinSquared).matrix;
  static const Matrix16 reflection = build_operator(Observable::kReflection).matrix;
  const SymmetryEigenbasis& nb = nssr_basis();
  const SymmetryEigenbasis& pb = pssr_basis();
  const Matrix16& m = rho.matrix();

  SymmetryReport report;
  report.tolerance = tol;
  report.particle_number = check(commutator_norm(m, number), tol);
  report.spin_z = check(commutator_norm(m, spin_z), tol);
  report.spin_squared = check(commutator_norm(m, spin_sq), tol);
  report.reflection = check(commutator_norm(m, reflection), tol);
  report.p10_equals_p11 =
      check(std::abs(expectation(rho, nb.vector(10)) - expectation(rho, nb.vector(11))), tol);
  report.p1_equals_p16 =
      check(std::abs(expectation(rho, nb.vector(1)) - expectation(rho, nb.vector(16))), tol);
  report.singlet_triplet_coherence = (nb.vector(8).adjoint() * m * nb.vector(9))(0, 0);
  report.pair_coherence = (pb.vector(6).adjoint() * m * pb.vector(7))(0, 0);
  return report;
}

void to_json(nlohmann::json& j, const SymmetryReport& report) {
  auto entry = [](const SymmetryCheck& c) {
    return nlohmann::json{{"holds", c.holds}, {"violation", c.violation}};
  };
  auto complex = [](Complex z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
  };
  j = nlohmann::json{
      {"tolerance", report.tolerance},
      {"particle_number", entry(report.particle_number)},
      {"spin_z", entry(report.spin_z)},
      {"spin_squared", entry(report.spin_squared)},
      {"reflection", entry(report.reflection)},
      {"p10_equals_p11", entry(report.p10_equals_p11)},
      {"p1_equals_p16", entry(report.p1_equals_p16)},
      {"singlet_triplet_coherence", complex(report.singlet_triplet_coherence)},
      {"pair_coherence", complex(report.pair_coherence)},
  };
}

std::string_view to_string(FormulaVariant variant) {
  switch (variant) {
    case FormulaVariant::kNssrSinglet: return "NSSR-singlet";
    case FormulaVariant::kNssrGeneral: return "NSSR-general";
    case FormulaVariant::kPssrSymmetric: return "PSSR-symmetric";
    case FormulaVariant::kPssrGeneral: return "PSSR-general";
  }
  return "unknown";
}

FormulaVariant select_formula(const SymmetryReport& report, Ssr ssr) {
  if (!report.spin_z.holds)
    throw InsufficientSymmetry("state does not commute with Sz; no closed formula applies");
  if (ssr == Ssr::kN) {
    if (!report.spin_squared.holds && !report.reflection.holds)
      throw InsufficientSymmetry(
          "N-SSR formulas need total-spin or reflection symmetry");
    return report.p10_equals_p11.holds ? FormulaVariant::kNssrSinglet
                                       : FormulaVariant::kNssrGeneral;
  }
  if (!report.particle_number.holds)
    throw InsufficientSymmetry("P-SSR formulas need particle-number symmetry");
  const bool pair_block_diagonal = std::abs(report.pair_coherence) <= report.tolerance;
  if (!report.reflection.holds && !(report.spin_squared.holds && pair_block_diagonal))
    throw InsufficientSymmetry(
        "P-SSR formulas need reflection symmetry (or total spin with a diagonal "
        "doubly-occupied block)");
  return report.p1_equals_p16.holds && report.p10_equals_p11.holds
             ? FormulaVariant::kPssrSymmetric
             : FormulaVariant::kPssrGeneral;
}

}  // namespace orbent
