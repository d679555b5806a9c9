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

#include "orbent/random.hpp"

#include <cmath>

#include "orbent/ssr.hpp"

namespace orbent {

namespace {

SectorSpectrum from_weights(const std::array<double, 16>& w, BasisVariant variant) {
  SectorSpectrum s;
  s.variant = variant;
  s.weights = w;
  return s;
}

Complex random_phase(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  return std::polar(1.0, angle(rng));
}

}  // namespace

SectorSpectrum random_singlet_spectrum(Rng& rng) {
  std::array<double, 16> w = random_simplex<16>(rng);
  const double avg = 0.5 * (w[9] + w[10]);
  w[9] = w[10] = avg;
  return from_weights(w, BasisVariant::kNssr);
}

SectorSpectrum random_general_spectrum(Rng& rng) {
  return from_weights(random_simplex<16>(rng), BasisVariant::kNssr);
}

SectorSpectrum random_pssr_spectrum(Rng& rng, bool symmetric) {
  std::array<double, 16> w = random_simplex<16>(rng);
  if (symmetric) {
    w[9] = w[10] = 0.5 * (w[9] + w[10]);
    w[0] = w[15] = 0.5 * (w[0] + w[15]);
  }
  return from_weights(w, BasisVariant::kPssr);
}

TwoOrbitalState state_from_spectrum(const SectorSpectrum& spectrum) {
  const SymmetryEigenbasis& basis =
      spectrum.variant == BasisVariant::kNssr ? nssr_basis() : pssr_basis();
  Eigen::Matrix<Complex, 16, 1> p;
  for (int i = 0; i < 16; ++i) p(i) = spectrum.weights[i];
  const Matrix16 rho = basis.vectors() * p.asDiagonal() * basis.vectors().adjoint();
  return TwoOrbitalState::from_matrix(rho, {1e-11, 1e-11, -1e-10});
}

TwoOrbitalState random_coherent_symmetric_state(Rng& rng) {
  const std::array<double, 16> w = random_simplex<16>(rng);
  Matrix16 rho = Matrix16::Zero();
  for (int i = 0; i < 16; ++i) rho(i, i) = w[i];
  using LS = LocalState;
  const int e1 = pair_index(LS::kUp, LS::kDown);
  const int e2 = pair_index(LS::kDown, LS::kUp);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  const Complex z = frac(rng) * std::sqrt(w[e1] * w[e2]) * random_phase(rng);
  rho(e1, e2) = z;
  rho(e2, e1) = std::conj(z);
  return TwoOrbitalState::from_matrix(rho);
}

TwoOrbitalState random_dual_rule_state(Rng& rng) {
  return state_from_spectrum(random_pssr_spectrum(rng, false));
}

TwoOrbitalState random_symmetric_separable_state(Rng& rng, int n_terms) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<int> count(0, 2);
  auto local_state = [&]() {
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    const int n = count(rng);
    if (n == 0) {
      phi(0) = 1.0;
    } else if (n == 2) {
      phi(3) = 1.0;
    } else {
      phi(1) = Complex(gauss(rng), gauss(rng));
      phi(2) = Complex(gauss(rng), gauss(rng));
      phi.normalize();
    }
    return phi;
  };
  const std::array<double, 16> mix = random_simplex<16>(rng);
  double used = 0.0;
  Matrix16 rho = Matrix16::Zero();
  for (int k = 0; k < n_terms; ++k) used += mix[k];
  for (int k = 0; k < n_terms; ++k) {
    const Eigen::Vector4cd a = local_state();
    const Eigen::Vector4cd b = local_state();
    Vector16 psi;
    for (int i = 0; i < 4; ++i) psi.segment<4>(4 * i) = a(i) * b;
    rho += (mix[k] / used) * psi * psi.adjoint();
  }
  return twirl(TwoOrbitalState::from_matrix(rho, {1e-11, 1e-11, -1e-10}),
               TwirlGenerator::kSpinZ);
}

Eigen::VectorXcd random_singlet(Rng& rng, int n_orbitals, int n_electrons) {
  if (n_orbitals < 1 || n_orbitals > 5) throw InvalidArgument("orbital count out of range");
  if (n_electrons < 0 || n_electrons > 2 * n_orbitals || n_electrons % 2 != 0)
    throw InvalidArgument("a singlet needs an even electron count that fits");
  const Eigen::MatrixXd s2 = total_spin_squared(n_orbitals);
  const Eigen::MatrixXd sz = total_spin_z(n_orbitals);
  const Eigen::MatrixXd n = total_particle_number(n_orbitals);
  std::vector<Eigen::Index> sector;
  for (Eigen::Index i = 0; i < n.rows(); ++i)
    if (std::abs(n(i, i) - n_electrons) < 0.5 && std::abs(sz(i, i)) < 0.25) sector.push_back(i);
  const Eigen::Index dim = static_cast<Eigen::Index>(sector.size());
  Eigen::MatrixXd block(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) block(i, j) = s2(sector[i], sector[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd local = Eigen::VectorXcd::Zero(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (std::abs(es.eigenvalues()(k)) > 1e-8) continue;
    local += Complex(gauss(rng), gauss(rng)) * es.eigenvectors().col(k).cast<Complex>();
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n.rows());
  for (Eigen::Index i = 0; i < dim; ++i) psi(sector[i]) = local(i);
  return psi.normalized();
}

}  // namespace orbent
