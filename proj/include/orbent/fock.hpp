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

// Two-orbital Fock space conventions.
//
// Global fermionic mode order is (A up, A down, B up, B down); for d orbitals
// it is (1 up, 1 down, 2 up, 2 down, ...). A basis vector is the ordered
// product of creation operators acting on the vacuum, lowest mode leftmost.
// The local single-orbital order is |0>, |up>, |down>, |up down> and the
// product index for d orbitals is sum_k local_k * 4^(d-1-k), i.e. 4*a + b for
// two orbitals.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "orbent/errors.hpp"

namespace orbent {

using Complex = std::complex<double>;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;
using Vector16 = Eigen::Matrix<Complex, 16, 1>;
using Matrix4c = Eigen::Matrix<Complex, 4, 4>;

inline constexpr int kLocalDim = 4;
inline constexpr int kPairDim = 16;

enum class LocalState : int { kEmpty = 0, kUp = 1, kDown = 2, kPair = 3 };

constexpr int local_up(int local) { return local & 1; }
constexpr int local_down(int local) { return (local >> 1) & 1; }
constexpr int local_count(int local) { return local_up(local) + local_down(local); }

constexpr int pair_index(LocalState a, LocalState b) {
  return kLocalDim * static_cast<int>(a) + static_cast<int>(b);
}

struct OccupationLabel {
  int n = 0;
  double sz = 0.0;
  int n_a = 0;
  int n_b = 0;
};

/// Quantum numbers of product basis vector `index` in [0, 16).
OccupationLabel occupation_label(int index);
/// Human-readable label such as "|up,down>".
std::string occupation_name(int index);

/// Occupation bits (bit k = global mode k) of a d-orbital product index.
std::uint64_t product_index_to_bits(std::uint64_t index, int n_orbitals);
std::uint64_t bits_to_product_index(std::uint64_t bits, int n_orbitals);

/// Sign (+1/-1) acquired by reordering the occupied creation operators of
/// `bits` so that `front_modes` come first (in the listed order) followed by
/// the remaining modes in ascending order.
int reorder_sign(std::uint64_t bits, std::span<const int> front_modes);

struct StateTolerances {
  double hermiticity = 1e-12;
  double trace = 1e-12;
  double psd = -1e-10;
};

/// Two-orbital density matrix in the occupation product basis. Always
/// Hermitian, unit trace and positive semidefinite within tolerance.
class TwoOrbitalState {
 public:
  static TwoOrbitalState from_matrix(const Matrix16& rho,
                                     const StateTolerances& tol = {});
  /// Normalizes `psi` and returns |psi><psi|.
  static TwoOrbitalState from_pure(const Vector16& psi);
  static TwoOrbitalState maximally_mixed();

  const Matrix16& matrix() const { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

 private:
  explicit TwoOrbitalState(const Matrix16& rho) : rho_(rho) {}
  Matrix16 rho_;
};

/// Throws InvalidState with a reason when `rho` violates a state invariant.
void validate_state(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                    const StateTolerances& tol = {});

enum class Observable {
  kParticleNumber,
  kSpinZ,
  kSpinSquared,
  kNumberA,
  kNumberB,
  kParity,
  kReflection,
  kCustom,
};

Observable observable_from_string(std::string_view name);
std::string_view to_string(Observable tag);

struct TwoOrbitalOperator {
  Matrix16 matrix;
  Observable tag = Observable::kCustom;
};

/// Fermionic observables assembled from Jordan-Wigner creation operators.
/// kReflection is the unitary orbital swap A <-> B including its fermionic
/// sign, (-1)^(N_A N_B).
TwoOrbitalOperator build_operator(Observable tag);

/// Real annihilation operator for `mode` on `n_modes` modes, in bit order
/// (index = sum_k n_k 2^k).
Eigen::MatrixXd annihilation_operator_bits(int mode, int n_modes);

/// Spin operators on d orbitals in product order (dimension 4^d).
Eigen::MatrixXd total_spin_squared(int n_orbitals);
Eigen::MatrixXd total_spin_z(int n_orbitals);
Eigen::MatrixXd total_particle_number(int n_orbitals);

enum class BasisVariant { kNssr, kPssr };

std::string_view to_string(BasisVariant variant);

struct SymmetryLabel {
  int n = 0;
  double sz = 0.0;
  double spin = 0.0;            // |S|, so S^2 = spin (spin + 1)
  std::optional<int> n_a;       // empty when not a local-number eigenvector
  std::optional<int> n_b;
};

/// Simultaneous eigenbasis |Psi_1> ... |Psi_16> of the two-orbital
/// symmetries. Labels are 1-based throughout to match the usual tables.
class SymmetryEigenbasis {
 public:
  BasisVariant variant() const { return variant_; }
  /// Column i-1 holds |Psi_i>.
  const Matrix16& vectors() const { return vectors_; }
  Vector16 vector(int label) const { return vectors_.col(label - 1); }
  const SymmetryLabel& label(int label) const { return labels_[label - 1]; }

  friend SymmetryEigenbasis build_symmetry_basis(BasisVariant variant);

 private:
  BasisVariant variant_ = BasisVariant::kNssr;
  Matrix16 vectors_ = Matrix16::Zero();
  std::array<SymmetryLabel, 16> labels_{};
};

SymmetryEigenbasis build_symmetry_basis(BasisVariant variant);

/// Cached instances; both are immutable.
const SymmetryEigenbasis& nssr_basis();
const SymmetryEigenbasis& pssr_basis();

/// Transposes the second tensor factor: ((a,b),(a',b')) -> ((a,b'),(a',b)).
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
partial_transpose(const Eigen::MatrixBase<Derived>& m, int dim_a, int dim_b) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m.rows(), m.cols());
  for (int a = 0; a < dim_a; ++a)
    for (int b = 0; b < dim_b; ++b)
      for (int ap = 0; ap < dim_a; ++ap)
        for (int bp = 0; bp < dim_b; ++bp)
          out(a * dim_b + bp, ap * dim_b + b) = m(a * dim_b + b, ap * dim_b + bp);
  return out;
}

Matrix16 partial_transpose(const TwoOrbitalState& rho);

/// Reduced state on the orbitals listed in `keep` (in that order) of a pure
/// or mixed state on `n_orbitals` orbitals in product order. Fermionic signs
/// come from reordering the kept creation operators in front of the traced
/// ones.
Eigen::MatrixXcd partial_trace_pure(const Eigen::Ref<const Eigen::VectorXcd>& psi,
                                    int n_orbitals, std::span<const int> keep);
Eigen::MatrixXcd partial_trace(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                               int n_orbitals, std::span<const int> keep);

TwoOrbitalState reduced_pair_state_pure(const Eigen::Ref<const Eigen::VectorXcd>& psi,
                                        int n_orbitals, int i, int j);
TwoOrbitalState reduced_pair_state(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                                   int n_orbitals, int i, int j);

/// Single-orbital marginals of a two-orbital state.
Matrix4c marginal_a(const TwoOrbitalState& rho);
Matrix4c marginal_b(const TwoOrbitalState& rho);

inline constexpr double kSupportCutoff = 1e-14;

/// S(rho||sigma) in nats. Returns +infinity when the support of rho is not
/// contained in the support of sigma.
double relative_entropy(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                        const Eigen::Ref<const Eigen::MatrixXcd>& sigma);

inline double relative_entropy(const TwoOrbitalState& rho,
                               const TwoOrbitalState& sigma) {
  return relative_entropy(rho.matrix(), sigma.matrix());
}

double von_neumann_entropy(const Eigen::Ref<const Eigen::MatrixXcd>& rho);

/// Frobenius norm of [a, b].
template <typename A, typename B>
double commutator_norm(const Eigen::MatrixBase<A>& a,
                       const Eigen::MatrixBase<B>& b) {
  return (a * b - b * a).norm();
}

}  // namespace orbent
