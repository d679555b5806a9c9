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

#include <cmath>
#include <numbers>

#include "orbent/entanglement.hpp"
#include "orbent/errors.hpp"
#include "orbent/free_fermion.hpp"
#include "orbent/oracle.hpp"
#include "orbent/random.hpp"
#include "orbent/ssr.hpp"
#include "support.hpp"

using namespace orbent;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kLn2 = std::numbers::ln2;

double binary_entropy(double x) {
  auto h = [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; };
  return h(x) + h(1.0 - x);
}

ConstrainedSimplexProblem m_problem(double p8, double p9, double p10, double p11) {
  ConstrainedSimplexProblem prob;
  const double rest = (1.0 - p8 - p9 - p10 - p11) / 12.0;
  prob.p.fill(rest);
  prob.p[7] = p8;
  prob.p[8] = p9;
  prob.p[9] = p10;
  prob.p[10] = p11;
  return prob;
}

}  // namespace

TEST_CASE("KL divergence of diagonal states is the quantum relative entropy") {
  Rng rng(41);
  for (int k = 0; k < 50; ++k) {
    const auto p = random_simplex<16>(rng);
    const auto q = random_simplex<16>(rng);
    Matrix16 rp = Matrix16::Zero(), rq = Matrix16::Zero();
    double direct = 0.0;
    for (int i = 0; i < 16; ++i) {
      rp(i, i) = p[i];
      rq(i, i) = q[i];
      direct += p[i] * std::log(p[i] / q[i]);
    }
    CHECK_THAT(kl_divergence(p, q), WithinAbs(direct, 1e-13));
    CHECK_THAT(relative_entropy(rp, rq), WithinAbs(direct, 1e-12));
  }
  const std::array<double, 2> p{1.0, 0.0}, q{0.0, 1.0};
  CHECK(std::isinf(kl_divergence(p, q)));
}

TEST_CASE("KL oracle reference cases") {
  const ConstrainedSimplexProblem sep = m_problem(0.2, 0.1, 0.15, 0.05);
  const OracleSolution s = kl_min_oracle(sep);
  CHECK(s.converged);
  CHECK_THAT(s.value, WithinAbs(0.0, 1e-15));
  for (int i = 0; i < 16; ++i) CHECK_THAT(s.q[i], WithinAbs(sep.p[i], 1e-15));

  const OracleSolution corner = kl_min_oracle(m_problem(1.0, 0.0, 0.0, 0.0));
  CHECK(corner.converged);
  CHECK_THAT(corner.value, WithinAbs(kLn2, 1e-12));

  const OracleSolution ref = kl_min_oracle(m_problem(0.5, 0.1, 0.1, 0.1));
  CHECK(ref.converged);
  CHECK_THAT(ref.value, WithinAbs(0.3 * std::log(0.75) + 0.5 * std::log(1.25), 1e-10));
  CHECK(ref.feasibility_residual <= 1e-12);
  CHECK(ref.stationarity_residual <= 1e-9);
  // The minimizer is a probability vector on the separable boundary.
  double total = 0.0;
  for (double q : ref.q) total += q;
  CHECK_THAT(total, WithinAbs(1.0, 1e-12));
  CHECK(is_separable_M(ref.q[7], ref.q[8], ref.q[9], ref.q[10] + 1e-12));
}

TEST_CASE("KL oracle rejects malformed problems") {
  ConstrainedSimplexProblem bad = m_problem(0.5, 0.1, 0.1, 0.1);
  bad.p[0] = -0.1;
  CHECK_THROWS_AS(kl_min_oracle(bad), InvalidArgument);
  ConstrainedSimplexProblem unnormalized = m_problem(0.5, 0.1, 0.1, 0.1);
  unnormalized.p[0] += 0.5;
  CHECK_THROWS_AS(kl_min_oracle(unnormalized), InvalidArgument);
}

TEST_CASE("partial-transpose oracle") {
  const PptResult product = ppt_oracle(TwoOrbitalState::maximally_mixed());
  CHECK(product.is_ppt);
  CHECK(product.min_eigenvalue >= 0.0);
  const PptResult singlet = ppt_oracle(TwoOrbitalState::from_pure(testing::singlet_vector()));
  CHECK_FALSE(singlet.is_ppt);
  CHECK_THAT(singlet.min_eigenvalue, WithinAbs(-0.5, 1e-14));

  Rng rng(42);
  for (int k = 0; k < 200; ++k) {
    const TwoOrbitalState sep = random_symmetric_separable_state(rng);
    CHECK(ppt_oracle(sep).is_ppt);
    CHECK(ppt_oracle(twirl(sep, TwirlGenerator::kSpinSquared)).is_ppt);
  }
}

TEST_CASE("coherent oracle on pure two-qubit-like states") {
  // cos(a)|up,down> + e^{i phi} sin(a)|down,up>: value is the binary entropy of cos^2(a).
  for (double a : {0.1, 0.4, 0.7, 1.2}) {
    for (double phi : {0.0, 0.9}) {
      Vector16 psi = Vector16::Zero();
      psi(testing::ket(1, 2)) = std::cos(a);
      psi(testing::ket(2, 1)) = std::polar(std::sin(a), phi);
      const TwoOrbitalState rho = TwoOrbitalState::from_pure(psi);
      const CoherentEntanglement e = coherent_entanglement_oracle(rho, Ssr::kN);
      CHECK(e.converged);
      CHECK_THAT(e.value, WithinAbs(binary_entropy(std::cos(a) * std::cos(a)), 1e-8));
    }
  }
  // The doubly-occupied pair under P-SSR behaves the same way.
  const double a = 0.5;
  Vector16 pair = Vector16::Zero();
  pair(testing::ket(0, 3)) = std::cos(a);
  pair(testing::ket(3, 0)) = std::sin(a);
  const TwoOrbitalState rho = TwoOrbitalState::from_pure(pair);
  const CoherentEntanglement e = coherent_entanglement_oracle(pssr_project(rho), Ssr::kP);
  CHECK(e.converged);
  CHECK_THAT(e.value, WithinAbs(binary_entropy(std::cos(a) * std::cos(a)), 1e-8));
}

TEST_CASE("coherent oracle matches the closed formula without coherence") {
  Rng rng(43);
  for (int k = 0; k < 30; ++k) {
    const SectorSpectrum s = random_general_spectrum(rng);
    const TwoOrbitalState rho = state_from_spectrum(s);
    const CoherentEntanglement e = coherent_entanglement_oracle(rho, Ssr::kN);
    CHECK(e.converged);
    CHECK_THAT(e.value, WithinAbs(nssr_entanglement_general(s).value, 1e-8));
  }
}

TEST_CASE("coherent oracle is a relative entropy to a separable state") {
  Rng rng(44);
  for (int k = 0; k < 20; ++k) {
    const TwoOrbitalState rho = random_coherent_symmetric_state(rng);
    const CoherentEntanglement e = coherent_entanglement_oracle(rho, Ssr::kN);
    CHECK(e.converged);
    CHECK(e.value >= 0.0);
    // Dephasing the sector block to the product basis is a separable candidate,
    // so the optimum cannot exceed it.
    Matrix16 dephased = nssr_project(rho).matrix();
    const int i = testing::ket(1, 2), j = testing::ket(2, 1);
    dephased(i, j) = dephased(j, i) = 0.0;
    CHECK(e.value <= relative_entropy(nssr_project(rho).matrix(), dephased) + 1e-10);
  }
  CHECK_THROWS_AS(
      coherent_entanglement_oracle(TwoOrbitalState::from_matrix(testing::random_density(rng)),
                                   Ssr::kN),
      InsufficientSymmetry);
}

TEST_CASE("Pfaffian squares to the determinant") {
  Rng rng(45);
  std::normal_distribution<double> g;
  for (int n = 2; n <= 10; n += 2) {
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    const Eigen::MatrixXcd skew = a - a.transpose();
    const Complex pf = pfaffian(skew);
    CHECK(std::abs(pf * pf - skew.determinant()) < 1e-9 * std::max(1.0, std::abs(pf * pf)));
  }
  Eigen::MatrixXcd two(2, 2);
  two << 0.0, Complex(1.5, 0.5), -Complex(1.5, 0.5), 0.0;
  CHECK(std::abs(pfaffian(two) - Complex(1.5, 0.5)) < 1e-15);
  CHECK(std::abs(pfaffian(Eigen::MatrixXcd::Zero(3, 3))) == 0.0);
}

TEST_CASE("Wick construction of Gaussian states") {
  // Uncorrelated modes give a product of Bernoulli factors in the occupation basis.
  const std::array<double, 4> n{0.2, 0.7, 0.4, 0.9};
  Matrix4c diag = Matrix4c::Zero();
  for (int k = 0; k < 4; ++k) diag(k, k) = n[k];
  const TwoOrbitalState prod = wick_rdm_oracle(diag);
  for (int s = 0; s < 16; ++s) {
    double expected = 1.0;
    for (int mode = 0; mode < 4; ++mode)
      expected *= testing::occupation(s, mode) ? n[mode] : 1.0 - n[mode];
    CHECK_THAT(prod(s, s).real(), WithinAbs(expected, 1e-14));
  }
  CHECK((prod.matrix() - Matrix16(prod.matrix().diagonal().asDiagonal())).norm() < 1e-14);

  for (double eta : {0.2, 0.5, 0.8})
    for (int l = 1; l <= 4; ++l) {
      const FillingFraction f(eta);
      const double c = correlation(f, l);
      Matrix4c corr = Matrix4c::Zero();
      for (int s = 0; s < 2; ++s) {
        corr(s, s) = corr(2 + s, 2 + s) = eta;
        corr(s, 2 + s) = corr(2 + s, s) = c;
      }
      CHECK((wick_rdm_oracle(corr).matrix() - two_site_rdm(f, l).matrix()).cwiseAbs().maxCoeff() <
            1e-12);
    }

  Matrix4c bad = diag;
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(wick_rdm_oracle(bad), InvalidArgument);
  Matrix4c out_of_range = diag;
  out_of_range(0, 0) = 1.5;
  CHECK_THROWS_AS(wick_rdm_oracle(out_of_range), InvalidArgument);
}
