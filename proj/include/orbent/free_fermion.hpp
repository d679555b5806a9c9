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

// Site-site entanglement in the ground state of the 1D free electron gas.

#include <vector>

#include "orbent/entanglement.hpp"
#include "orbent/fock.hpp"

namespace orbent {

/// Per-spin filling eta in (0, 1): density of each spin species.
class FillingFraction {
 public:
  explicit FillingFraction(double eta);
  double value() const { return eta_; }

 private:
  double eta_;
};

/// <f^dag_{i,s} f_{i+l,s}> of the infinite filled Fermi sea.
double correlation(FillingFraction eta, int l);

/// Two-orbital state of a spin-balanced number-conserving Gaussian state with
/// per-spin correlation block [[n_a, c], [conj(c), n_b]].
TwoOrbitalState gaussian_two_orbital_rdm(double n_a, double n_b, Complex c);

/// Reduced state of sites i and i + l.
TwoOrbitalState two_site_rdm(FillingFraction eta, int l);

struct DistancePoint {
  int l = 0;
  double entanglement = 0.0;  // nats
  double r = 0.0;
  double t = 0.0;
};

std::vector<DistancePoint> entanglement_vs_distance(FillingFraction eta, int l_max);

/// sqrt(2) / (pi eta (1 - eta)).
double lmin_leading_order(FillingFraction eta);
/// 4 * ceil(lmin_leading_order(eta)).
int default_l_cap(FillingFraction eta);

struct DisentanglingDistance {
  int l_min = 0;
  int l_cap = 0;
};

/// Smallest l with E(l') = 0 for every l' in [l, l_cap]. Throws
/// NotDisentangledWithinCap when E(l_cap) > 0.
DisentanglingDistance disentangling_distance(FillingFraction eta, int l_cap);
DisentanglingDistance disentangling_distance(FillingFraction eta);

enum class Boundary { kOpen, kPeriodic };

/// Exact <f^dag_i f_j> of the N lowest single-particle modes of the
/// nearest-neighbor tight-binding chain. Periodic chains need a closed shell
/// (N odd) so that the ground state is unique.
double finite_chain_correlation(int length, int n_per_spin, int i, int j,
                                Boundary boundary = Boundary::kOpen);
Eigen::MatrixXd finite_chain_correlation_matrix(int length, int n_per_spin,
                                                Boundary boundary = Boundary::kOpen);

}  // namespace orbent
