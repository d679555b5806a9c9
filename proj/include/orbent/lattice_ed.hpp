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

// Exact diagonalization of small (extended) Hubbard chains.
//
// Sites carry two modes in the global order (0 up, 0 down, 1 up, ...), the
// same convention as the d-orbital product basis, so pair reductions follow
// the two-orbital Fock conventions directly.

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "orbent/entanglement.hpp"
#include "orbent/fock.hpp"
#include "orbent/free_fermion.hpp"

namespace orbent {

inline constexpr int kMaxChainLength = 14;

struct ChainSpec {
  int length = 2;
  int n_up = 1;
  int n_down = 1;
  Boundary boundary = Boundary::kOpen;
  double t_hop = 1.0;
  double u = 0.0;
  double v = 0.0;

  static ChainSpec half_filled(int length, double u, double v,
                               Boundary boundary = Boundary::kOpen);
  void validate() const;
};

/// Fixed (N_up, N_down) sector. State k has up bits up_states[k / n_down]
/// and down bits down_states[k % n_down] (lexicographic in both).
class SectorBasis {
 public:
  SectorBasis(int length, int n_up, int n_down);

  int length() const { return length_; }
  std::size_t size() const { return up_.size() * down_.size(); }
  std::size_t n_up_states() const { return up_.size(); }
  std::size_t n_down_states() const { return down_.size(); }
  std::uint32_t up_bits(std::size_t k) const { return up_[k / down_.size()]; }
  std::uint32_t down_bits(std::size_t k) const { return down_[k % down_.size()]; }
  /// Interleaved mode bits: bit 2i = site i up, bit 2i+1 = site i down.
  std::uint64_t mode_bits(std::size_t k) const;
  std::optional<std::size_t> index(std::uint32_t up, std::uint32_t down) const;

 private:
  int length_;
  std::vector<std::uint32_t> up_, down_;
  std::vector<std::int32_t> up_rank_, down_rank_;
};

using SparseHamiltonian = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Default budget for the sparse Hamiltonian, in bytes.
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{3} << 30;

/// H = t_hop H_free + U sum_i n_up n_down + V sum_<ij> n_i n_j with
/// H_free = -sum_<ij>,s (c^dag_is c_js + h.c.).
SparseHamiltonian build_hamiltonian(const ChainSpec& spec, const SectorBasis& basis,
                                    std::size_t memory_budget = kDefaultMemoryBudget);

struct EigenSettings {
  std::size_t dense_limit = 2000;
  double residual_tol = 1e-10;
  double degeneracy_gap = 1e-10;
  int krylov_dim = 120;
  int max_restarts = 200;
  std::uint64_t seed = 7;
};

struct GroundState {
  double energy = 0.0;
  Eigen::VectorXd amplitudes;
  double residual = 0.0;
  double gap = 0.0;  // to the next level found; +inf for a 1-dim sector
  bool degenerate = false;
  /// Orthonormal basis of the lowest level when it is degenerate.
  std::vector<Eigen::VectorXd> manifold;
};

/// Lowest eigenpair. Dense below settings.dense_limit, restarted Lanczos with
/// full reorthogonalization otherwise. The next level comes from a second,
/// deflated run.
GroundState ground_state(const SparseHamiltonian& h, const EigenSettings& settings = {});

struct ChainGroundState {
  ChainSpec spec;
  SectorBasis basis;
  GroundState state;
};

/// Builds and solves; throws DegenerateGroundState unless `allow_degenerate`.
ChainGroundState solve_chain(const ChainSpec& spec, const EigenSettings& settings = {},
                             bool allow_degenerate = false);

/// Reduced state of sites i and j (in that order) of a sector vector.
TwoOrbitalState two_orbital_rdm(const SectorBasis& basis, const Eigen::VectorXd& psi, int i,
                                int j);
/// Pair state of the ground state; an equal mixture over a degenerate
/// manifold.
TwoOrbitalState two_orbital_rdm(const ChainGroundState& gs, int i, int j);

/// <S^2> = Sz (Sz + 1) + ||S^+ psi||^2.
double spin_squared_expectation(const SectorBasis& basis, const Eigen::VectorXd& psi);

/// <c^dag_{i,s} c_{j,s}> summed over spin.
Eigen::MatrixXd one_body_rdm(const SectorBasis& basis, const Eigen::VectorXd& psi);

struct NaturalOrbitals {
  Eigen::VectorXd occupations;  // descending, spin-summed
  Eigen::MatrixXd orbitals;     // column k = orbital k in site coordinates
};

NaturalOrbitals natural_orbitals(const SectorBasis& basis, const Eigen::VectorXd& psi);

/// The same many-body state expanded in the orbitals `m` (columns, real
/// orthogonal) instead of the sites.
Eigen::VectorXd rotate_orbitals(const SectorBasis& basis, const Eigen::VectorXd& psi,
                                const Eigen::MatrixXd& m);

struct BondScanPoint {
  double u = 0.0;
  double v = 0.0;
  double energy = 0.0;
  double e_left = 0.0;   // E(rho_{pivot-1, pivot})
  double e_right = 0.0;  // E(rho_{pivot, pivot+1})
  double e_strong = 0.0;
  double e_weak = 0.0;
  double delta = 0.0;  // e_strong - e_weak
  double spin_squared = 0.0;
};

struct BondScanConfig {
  int length = 8;
  int pivot = 4;
  std::vector<double> u_values{0.0};
  std::vector<double> v_values{0.0};
  double t_hop = 1.0;
  Boundary boundary = Boundary::kOpen;
  /// Symmetry tolerance for ground-state pair states (Krylov accuracy).
  double tol = 1e-8;
  int threads = 0;  // 0: ORBENT_NUM_THREADS or 1
};

/// Entanglement of the two bonds at `pivot` over a (U, V) grid at half
/// filling. The strong bond is the one whose left site is even.
std::vector<BondScanPoint> bond_scan(const BondScanConfig& config);

/// Thread count from ORBENT_NUM_THREADS, defaulting to 1.
int configured_threads();

struct DimerAnalytics {
  double u = 0.0;
  double v = 0.0;
  double t_hop = 1.0;
  double energy_exact = 0.0;  // ((U+V) - sqrt((U-V)^2 + 16 t^2)) / 2
  double energy_ed = 0.0;
  double covalent_weight = 0.0;  // weight of the singlet |Psi_8>
  double entanglement_n_exact = 0.0;
  double entanglement_n = 0.0;
  double entanglement_p = 0.0;
  double mutual_information = 0.0;
};

DimerAnalytics dimer_analytics(double u, double v, double t_hop = 1.0);

}  // namespace orbent
