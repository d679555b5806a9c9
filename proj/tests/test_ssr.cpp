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

#include <catch_amalgamated.hpp>

#include "orbent/entanglement.hpp"
#include "orbent/errors.hpp"
#include "orbent/random.hpp"
#include "orbent/ssr.hpp"
#include "support.hpp"

using namespace orbent;

namespace {

template <typename Keep>
Matrix16 pinch(const Matrix16& m, Keep keep) {
  Matrix16 out = Matrix16::Zero();
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j)
      if (keep(i, j)) out(i, j) = m(i, j);
  return out;
}

int n_a(int i) { return local_count(i / 4); }
int n_b(int i) { return local_count(i % 4); }

TwoOrbitalState random_state(Rng& rng) {
  return TwoOrbitalState::from_matrix(testing::random_density(rng));
}

}  // namespace

TEST_CASE("superselection projections are pinchings by local number or parity") {
  Rng rng(21);
  for (int k = 0; k < 50; ++k) {
    const TwoOrbitalState rho = random_state(rng);
    const Matrix16 n_expected = pinch(rho.matrix(), [](int i, int j) {
      return n_a(i) == n_a(j) && n_b(i) == n_b(j);
    });
    const Matrix16 p_expected = pinch(rho.matrix(), [](int i, int j) {
      return n_a(i) % 2 == n_a(j) % 2 && n_b(i) % 2 == n_b(j) % 2;
    });
    const TwoOrbitalState pn = nssr_project(rho);
    const TwoOrbitalState pp = pssr_project(rho);
    CHECK((pn.matrix() - n_expected).norm() < 1e-15);
    CHECK((pp.matrix() - p_expected).norm() < 1e-15);
    // Idempotent, trace preserving, and N-SSR is finer than P-SSR.
    CHECK((nssr_project(pn).matrix() - pn.matrix()).norm() < 1e-15);
    CHECK((pssr_project(pp).matrix() - pp.matrix()).norm() < 1e-15);
    CHECK(std::abs(pn.matrix().trace().real() - 1.0) < 1e-13);
    CHECK((nssr_project(pp).matrix() - pn.matrix()).norm() < 1e-15);
    CHECK((ssr_project(rho, Ssr::kP).matrix() - pp.matrix()).norm() == 0.0);
  }
}

TEST_CASE("twirls produce symmetric states and are idempotent") {
  const testing::PairOperators ops = testing::pair_operators();
  Rng rng(22);
  for (int k = 0; k < 30; ++k) {
    const TwoOrbitalState rho = random_state(rng);
    const TwoOrbitalState sz = twirl(rho, TwirlGenerator::kSpinZ);
    const TwoOrbitalState n = twirl(rho, TwirlGenerator::kParticleNumber);
    const TwoOrbitalState s2 = twirl(rho, TwirlGenerator::kSpinSquared);
    CHECK(commutator_norm(sz.matrix(), ops.sz.cast<Complex>()) < 1e-13);
    CHECK(commutator_norm(n.matrix(), ops.n.cast<Complex>()) < 1e-13);
    CHECK(commutator_norm(s2.matrix(), ops.s2.cast<Complex>()) < 1e-13);
    CHECK((twirl(s2, TwirlGenerator::kSpinSquared).matrix() - s2.matrix()).norm() < 1e-13);
    CHECK(std::abs(s2.matrix().trace().real() - 1.0) < 1e-13);
    CHECK((twirl(rho, TwirlGenerator::kLocalNumber).matrix() - nssr_project(rho).matrix())
              .norm() == 0.0);
  }
  CHECK(twirl_generator_from_string("S2") == TwirlGenerator::kSpinSquared);
  CHECK_THROWS_AS(twirl_generator_from_string("Lz"), InvalidArgument);
}

TEST_CASE("rule names parse") {
  CHECK(ssr_from_string("N") == Ssr::kN);
  CHECK(ssr_from_string("P") == Ssr::kP);
  CHECK(to_string(Ssr::kP) == "P");
  CHECK_THROWS_AS(ssr_from_string("Q"), InvalidArgument);
}

TEST_CASE("detected symmetries of the singlet") {
  const TwoOrbitalState singlet = TwoOrbitalState::from_pure(testing::singlet_vector());
  const SymmetryReport r = detect_symmetries(singlet);
  CHECK(r.particle_number.holds);
  CHECK(r.spin_z.holds);
  CHECK(r.spin_squared.holds);
  CHECK(r.reflection.holds);
  CHECK(r.p10_equals_p11.holds);
  CHECK(std::abs(r.singlet_triplet_coherence) < 1e-15);
  CHECK(select_formula(r, Ssr::kN) == FormulaVariant::kNssrSinglet);
  CHECK(select_formula(r, Ssr::kP) == FormulaVariant::kPssrSymmetric);
}

TEST_CASE("singlet-triplet coherence is reported") {
  // cos(a) |up, down> + sin(a) |down, up> has <Psi8|rho|Psi9> = -cos(2a) / 2.
  const double a = 0.3;
  Vector16 psi = Vector16::Zero();
  psi(testing::ket(1, 2)) = std::cos(a);
  psi(testing::ket(2, 1)) = std::sin(a);
  const SymmetryReport r = detect_symmetries(TwoOrbitalState::from_pure(psi));
  CHECK(std::abs(std::abs(r.singlet_triplet_coherence) - 0.5 * std::cos(2 * a)) < 1e-14);
  CHECK(r.spin_z.holds);
  CHECK_FALSE(r.spin_squared.holds);
  CHECK_FALSE(r.reflection.holds);
  CHECK_THROWS_AS(select_formula(r, Ssr::kN), InsufficientSymmetry);
}

TEST_CASE("formula selection follows the available symmetries") {
  Rng rng(23);
  const SymmetryReport generic = detect_symmetries(random_state(rng));
  CHECK_FALSE(generic.spin_z.holds);
  CHECK_THROWS_AS(select_formula(generic, Ssr::kN), InsufficientSymmetry);
  CHECK_THROWS_AS(select_formula(generic, Ssr::kP), InsufficientSymmetry);

  for (int k = 0; k < 20; ++k) {
    const TwoOrbitalState singlet_like = state_from_spectrum(random_singlet_spectrum(rng));
    CHECK(select_formula(detect_symmetries(singlet_like), Ssr::kN) ==
          FormulaVariant::kNssrSinglet);
    const TwoOrbitalState general = state_from_spectrum(random_general_spectrum(rng));
    CHECK(select_formula(detect_symmetries(general), Ssr::kN) == FormulaVariant::kNssrGeneral);
    const TwoOrbitalState sym = state_from_spectrum(random_pssr_spectrum(rng, true));
    CHECK(select_formula(detect_symmetries(sym), Ssr::kP) == FormulaVariant::kPssrSymmetric);
    const TwoOrbitalState gen = state_from_spectrum(random_pssr_spectrum(rng, false));
    CHECK(select_formula(detect_symmetries(gen), Ssr::kP) == FormulaVariant::kPssrGeneral);
  }
}

TEST_CASE("P-SSR refuses states without particle-number symmetry") {
  // Coherence between |0,0> and |updown, 0> breaks N but survives the parity pinching.
  Matrix16 m = Matrix16::Zero();
  m(0, 0) = 0.5;
  m(12, 12) = 0.5;
  m(0, 12) = m(12, 0) = 0.2;
  const TwoOrbitalState rho = TwoOrbitalState::from_matrix(m);
  const SymmetryReport r = detect_symmetries(pssr_project(rho));
  CHECK_FALSE(r.particle_number.holds);
  CHECK_THROWS_AS(select_formula(r, Ssr::kP), InsufficientSymmetry);
  // The same coherence is removed by the N-SSR projection.
  CHECK(detect_symmetries(nssr_project(rho)).particle_number.holds);
}
