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

#include "orbent/free_fermion.hpp"

#include <cmath>
#include <numbers>

#include "orbent/ssr.hpp"

namespace orbent {

FillingFraction::FillingFraction(double eta) : eta_(eta) {
  if (!(eta > 0.0 && eta < 1.0)) throw InvalidArgument("filling must lie in (0, 1)");
}

double correlation(FillingFraction eta, int l) {
  if (l < 0) throw InvalidArgument("distance must be nonnegative");
  if (l == 0) return eta.value();
  const double x = std::numbers::pi * static_cast<double>(l);
  return std::sin(x * eta.value()) / x;
}

namespace {

// Two-mode state of one spin species in the basis |n_a n_b> with index
// n_a + 2 n_b.
Eigen::Matrix4cd spin_species_rdm(double n_a, double n_b, Complex c) {
  const double both = n_a * n_b - std::norm(c);
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = 1.0 - n_a - n_b + both;
  rho(1, 1) = n_a - both;
  rho(2, 2) = n_b - both;
  rho(3, 3) = both;
  // <a|rho|b> = <f^dag_b f_a>.
  rho(1, 2) = std::conj(c);
  rho(2, 1) = c;
  return rho;
}

}  // namespace

TwoOrbitalState gaussian_two_orbital_rdm(double n_a, double n_b, Complex c) {
  if (!(n_a >= 0.0 && n_a <= 1.0 && n_b >= 0.0 && n_b <= 1.0))
    throw InvalidArgument("occupations must lie in [0, 1]");
  if (!(std::norm(c) <= n_a * n_b + 1e-12 && std::norm(c) <= (1.0 - n_a) * (1.0 - n_b) + 1e-12))
    throw InvalidArgument("correlation exceeds the bound for these occupations");
  const Eigen::Matrix4cd up = spin_species_rdm(n_a, n_b, c);
  const Eigen::Matrix4cd down = up;
  Matrix16 rho;
  for (int n = 0; n < 16; ++n) {
    const std::uint64_t bn = product_index_to_bits(n, 2);
    for (int m = 0; m < 16; ++m) {
      const std::uint64_t bm = product_index_to_bits(m, 2);
      auto bit = [](std::uint64_t b, int k) { return static_cast<int>((b >> k) & 1); };
      // Species-separated order (A up, B up, A down, B down) differs from the
      // global order by moving B up across A down.
      const int sign_n = (bit(bn, 1) & bit(bn, 2)) ? -1 : 1;
      const int sign_m = (bit(bm, 1) & bit(bm, 2)) ? -1 : 1;
      const int un = bit(bn, 0) + 2 * bit(bn, 2), um = bit(bm, 0) + 2 * bit(bm, 2);
      const int dn = bit(bn, 1) + 2 * bit(bn, 3), dm = bit(bm, 1) + 2 * bit(bm, 3);
      rho(n, m) = static_cast<double>(sign_n * sign_m) * up(un, um) * down(dn, dm);
    }
  }
  return TwoOrbitalState::from_matrix(rho);
}

TwoOrbitalState two_site_rdm(FillingFraction eta, int l) {
  if (l < 1) throw InvalidArgument("site distance must be at least 1");
  return gaussian_two_orbital_rdm(eta.value(), eta.value(), correlation(eta, l));
}

std::vector<DistancePoint> entanglement_vs_distance(FillingFraction eta, int l_max) {
  if (l_max < 1) throw InvalidArgument("l_max must be at least 1");
  std::vector<DistancePoint> out;
  out.reserve(static_cast<std::size_t>(l_max));
  for (int l = 1; l <= l_max; ++l) {
    const EntanglementResult r = evaluate_entanglement(two_site_rdm(eta, l));
    out.push_back({l, r.value, r.sector_m.r, r.sector_m.t});
  }
  return out;
}

double lmin_leading_order(FillingFraction eta) {
  const double x = eta.value();
  return std::numbers::sqrt2 / (std::numbers::pi * x * (1.0 - x));
}

int default_l_cap(FillingFraction eta) {
  return 4 * static_cast<int>(std::ceil(lmin_leading_order(eta)));
}

DisentanglingDistance disentangling_distance(FillingFraction eta, int l_cap) {
  const int minimum = static_cast<int>(std::ceil(3.0 * lmin_leading_order(eta)));
  if (l_cap < minimum)
    throw InvalidArgument("l_cap must be at least " + std::to_string(minimum));
  const std::vector<DistancePoint> series = entanglement_vs_distance(eta, l_cap);
  if (series.back().entanglement > 0.0)
    throw NotDisentangledWithinCap("entanglement nonzero at l_cap = " + std::to_string(l_cap));
  int l_min = l_cap;
  while (l_min > 1 && series[static_cast<std::size_t>(l_min - 2)].entanglement == 0.0) --l_min;
  return {l_min, l_cap};
}

DisentanglingDistance disentangling_distance(FillingFraction eta) {
  return disentangling_distance(eta, default_l_cap(eta));
}

Eigen::MatrixXd finite_chain_correlation_matrix(int length, int n_per_spin,
                                                Boundary boundary) {
  if (length < 1) throw InvalidArgument("chain length must be positive");
  if (n_per_spin < 0 || n_per_spin > length)
    throw InvalidArgument("particle number must lie in [0, L]");
  const double pi = std::numbers::pi;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(length, length);
  if (boundary == Boundary::kOpen) {
    Eigen::MatrixXd phi(length, n_per_spin);
    const double norm = std::sqrt(2.0 / (length + 1));
    for (int i = 0; i < length; ++i)
      for (int k = 1; k <= n_per_spin; ++k)
        phi(i, k - 1) = norm * std::sin(pi * k * (i + 1) / (length + 1));
    c = phi * phi.transpose();
    return c;
  }
  if (n_per_spin % 2 == 0 && n_per_spin != 0 && n_per_spin != length)
    throw InvalidArgument("periodic chain needs an odd (closed-shell) particle number");
  const int kmax = (n_per_spin - 1) / 2;
  for (int i = 0; i < length; ++i)
    for (int j = 0; j < length; ++j) {
      if (n_per_spin == length) {
        c(i, j) = i == j ? 1.0 : 0.0;
        continue;
      }
      double sum = 0.0;
      for (int k = -kmax; k <= kmax; ++k) sum += std::cos(2.0 * pi * k * (i - j) / length);
      c(i, j) = sum / length;
    }
  return c;
}

double finite_chain_correlation(int length, int n_per_spin, int i, int j, Boundary boundary) {
  if (i < 0 || j < 0 || i >= length || j >= length)
    throw InvalidArgument("site index out of range");
  if (boundary == Boundary::kPeriodic)
    return finite_chain_correlation_matrix(length, n_per_spin, boundary)(i, j);
  if (length < 1) throw InvalidArgument("chain length must be positive");
  if (n_per_spin < 0 || n_per_spin > length)
    throw InvalidArgument("particle number must lie in [0, L]");
  const double pi = std::numbers::pi;
  double sum = 0.0;
  for (int k = 1; k <= n_per_spin; ++k)
    sum += std::sin(pi * k * (i + 1) / (length + 1)) * std::sin(pi * k * (j + 1) / (length + 1));
  return 2.0 * sum / (length + 1);
}

}  // namespace orbent
