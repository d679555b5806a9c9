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

#include "orbent/fock.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace orbent {

namespace {

constexpr std::array<const char*, 4> kLocalNames = {"0", "up", "down", "updown"};

std::uint64_t pow4(int k) { return std::uint64_t{1} << (2 * k); }

int parity_sign(std::uint64_t bits) {
  return (std::popcount(bits) & 1) ? -1 : 1;
}

Matrix16 to_product_order(const Eigen::MatrixXd& bits_op) {
  Matrix16 out;
  for (int i = 0; i < kPairDim; ++i)
    for (int j = 0; j < kPairDim; ++j)
      out(i, j) = bits_op(static_cast<int>(product_index_to_bits(i, 2)),
                          static_cast<int>(product_index_to_bits(j, 2)));
  return out;
}

Eigen::MatrixXd bits_to_product(const Eigen::MatrixXd& bits_op, int n_orbitals) {
  const Eigen::Index dim = bits_op.rows();
  Eigen::MatrixXd out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      out(i, j) = bits_op(product_index_to_bits(i, n_orbitals),
                          product_index_to_bits(j, n_orbitals));
  return out;
}

struct SpinOperators {
  Eigen::MatrixXd number, sz, s_squared;
};

// Spin algebra on d orbitals in bit order.
SpinOperators spin_operators_bits(int n_orbitals) {
  const int n_modes = 2 * n_orbitals;
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  SpinOperators ops{Eigen::MatrixXd::Zero(dim, dim), Eigen::MatrixXd::Zero(dim, dim),
                    Eigen::MatrixXd::Zero(dim, dim)};
  Eigen::MatrixXd s_plus = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k < n_orbitals; ++k) {
    const Eigen::MatrixXd up = annihilation_operator_bits(2 * k, n_modes);
    const Eigen::MatrixXd dn = annihilation_operator_bits(2 * k + 1, n_modes);
    const Eigen::MatrixXd n_up = up.transpose() * up;
    const Eigen::MatrixXd n_dn = dn.transpose() * dn;
    ops.number += n_up + n_dn;
    ops.sz += 0.5 * (n_up - n_dn);
    s_plus += up.transpose() * dn;
  }
  ops.s_squared = s_plus.transpose() * s_plus + ops.sz * ops.sz + ops.sz;
  return ops;
}

}  // namespace

OccupationLabel occupation_label(int index) {
  if (index < 0 || index >= kPairDim)
    throw InvalidArgument("occupation index out of range: " + std::to_string(index));
  const int a = index / kLocalDim;
  const int b = index % kLocalDim;
  OccupationLabel label;
  label.n_a = local_count(a);
  label.n_b = local_count(b);
  label.n = label.n_a + label.n_b;
  label.sz = 0.5 * (local_up(a) - local_down(a) + local_up(b) - local_down(b));
  return label;
}

std::string occupation_name(int index) {
  if (index < 0 || index >= kPairDim)
    throw InvalidArgument("occupation index out of range: " + std::to_string(index));
  std::ostringstream os;
  os << '|' << kLocalNames[index / kLocalDim] << ',' << kLocalNames[index % kLocalDim]
     << '>';
  return os.str();
}

std::uint64_t product_index_to_bits(std::uint64_t index, int n_orbitals) {
  std::uint64_t bits = 0;
  for (int k = 0; k < n_orbitals; ++k) {
    const auto local = static_cast<int>((index / pow4(n_orbitals - 1 - k)) % 4);
    if (local_up(local)) bits |= std::uint64_t{1} << (2 * k);
    if (local_down(local)) bits |= std::uint64_t{1} << (2 * k + 1);
  }
  return bits;
}

std::uint64_t bits_to_product_index(std::uint64_t bits, int n_orbitals) {
  std::uint64_t index = 0;
  for (int k = 0; k < n_orbitals; ++k) {
    const std::uint64_t local = ((bits >> (2 * k)) & 1) | (((bits >> (2 * k + 1)) & 1) << 1);
    index += local * pow4(n_orbitals - 1 - k);
  }
  return index;
}

int reorder_sign(std::uint64_t bits, std::span<const int> front_modes) {
  std::uint64_t front_mask = 0;
  for (int m : front_modes) front_mask |= std::uint64_t{1} << m;
  const std::uint64_t rest = bits & ~front_mask;
  int inversions = 0;
  for (std::size_t i = 0; i < front_modes.size(); ++i) {
    const int fi = front_modes[i];
    if (!((bits >> fi) & 1)) continue;
    inversions += std::popcount(rest & ((std::uint64_t{1} << fi) - 1));
    for (std::size_t j = i + 1; j < front_modes.size(); ++j) {
      const int fj = front_modes[j];
      if (((bits >> fj) & 1) && fi > fj) ++inversions;
    }
  }
  return (inversions & 1) ? -1 : 1;
}

void validate_state(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                    const StateTolerances& tol) {
  if (rho.rows() != rho.cols() || rho.rows() == 0)
    throw InvalidState("density matrix must be square and non-empty");
  if (!rho.allFinite()) throw InvalidState("density matrix has non-finite entries");
  const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.hermiticity)
    throw InvalidState("density matrix is not Hermitian (max deviation " +
                       std::to_string(asym) + ")");
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.trace)
    throw InvalidState("density matrix trace is " + std::to_string(tr.real()) +
                       ", expected 1");
  const Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < tol.psd)
    throw InvalidState("density matrix has negative eigenvalue " +
                       std::to_string(min_eig));
}

TwoOrbitalState TwoOrbitalState::from_matrix(const Matrix16& rho,
                                             const StateTolerances& tol) {
  validate_state(rho, tol);
  return TwoOrbitalState(0.5 * (rho + rho.adjoint()));
}

TwoOrbitalState TwoOrbitalState::from_pure(const Vector16& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw InvalidArgument("pure state vector has zero norm");
  const Vector16 unit = psi / norm;
  return TwoOrbitalState(unit * unit.adjoint());
}

TwoOrbitalState TwoOrbitalState::maximally_mixed() {
  return TwoOrbitalState(Matrix16::Identity() / 16.0);
}

Observable observable_from_string(std::string_view name) {
  if (name == "N") return Observable::kParticleNumber;
  if (name == "Sz") return Observable::kSpinZ;
  if (name == "S2") return Observable::kSpinSquared;
  if (name == "NA") return Observable::kNumberA;
  if (name == "NB") return Observable::kNumberB;
  if (name == "parity") return Observable::kParity;
  if (name == "reflection") return Observable::kReflection;
  throw InvalidArgument("unknown observable tag '" + std::string(name) + "'");
}

std::string_view to_string(Observable tag) {
  switch (tag) {
    case Observable::kParticleNumber: return "N";
    case Observable::kSpinZ: return "Sz";
    case Observable::kSpinSquared: return "S2";
    case Observable::kNumberA: return "NA";
    case Observable::kNumberB: return "NB";
    case Observable::kParity: return "parity";
    case Observable::kReflection: return "reflection";
    case Observable::kCustom: return "custom";
  }
  return "custom";
}

Eigen::MatrixXd annihilation_operator_bits(int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes || n_modes > 20)
    throw InvalidArgument("mode index out of range");
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(dim, dim);
  const std::uint64_t bit = std::uint64_t{1} << mode;
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    if (!(b & bit)) continue;
    op(static_cast<Eigen::Index>(b ^ bit), static_cast<Eigen::Index>(b)) =
        parity_sign(b & (bit - 1));
  }
  return op;
}

Eigen::MatrixXd total_spin_squared(int n_orbitals) {
  return bits_to_product(spin_operators_bits(n_orbitals).s_squared, n_orbitals);
}

Eigen::MatrixXd total_spin_z(int n_orbitals) {
  return bits_to_product(spin_operators_bits(n_orbitals).sz, n_orbitals);
}

Eigen::MatrixXd total_particle_number(int n_orbitals) {
  return bits_to_product(spin_operators_bits(n_orbitals).number, n_orbitals);
}

TwoOrbitalOperator build_operator(Observable tag) {
  TwoOrbitalOperator op{Matrix16::Zero(), tag};
  switch (tag) {
    case Observable::kParticleNumber:
    case Observable::kSpinZ:
    case Observable::kSpinSquared: {
      const SpinOperators spin = spin_operators_bits(2);
      const Eigen::MatrixXd& m = tag == Observable::kParticleNumber ? spin.number
                                 : tag == Observable::kSpinZ        ? spin.sz
                                                                    : spin.s_squared;
      op.matrix = to_product_order(m);
      break;
    }
    case Observable::kNumberA:
    case Observable::kNumberB: {
      const int first = tag == Observable::kNumberA ? 0 : 2;
      const Eigen::MatrixXd up = annihilation_operator_bits(first, 4);
      const Eigen::MatrixXd dn = annihilation_operator_bits(first + 1, 4);
      op.matrix = to_product_order(up.transpose() * up + dn.transpose() * dn);
      break;
    }
    case Observable::kParity:
      for (int i = 0; i < kPairDim; ++i)
        op.matrix(i, i) = (occupation_label(i).n % 2) ? -1.0 : 1.0;
      break;
    case Observable::kReflection:
      for (int a = 0; a < kLocalDim; ++a)
        for (int b = 0; b < kLocalDim; ++b) {
          const double sign = (local_count(a) * local_count(b)) % 2 ? -1.0 : 1.0;
          op.matrix(kLocalDim * b + a, kLocalDim * a + b) = sign;
        }
      break;
    case Observable::kCustom:
      throw InvalidArgument("custom operators carry their own matrix");
  }
  return op;
}

std::string_view to_string(BasisVariant variant) {
  return variant == BasisVariant::kNssr ? "N-SSR" : "P-SSR";
}

SymmetryEigenbasis build_symmetry_basis(BasisVariant variant) {
  using LS = LocalState;
  SymmetryEigenbasis basis;
  basis.variant_ = variant;
  const double h = 1.0 / std::sqrt(2.0);
  auto set_product = [&](int label, LS a, LS b, SymmetryLabel q) {
    basis.vectors_(pair_index(a, b), label - 1) = 1.0;
    basis.labels_[label - 1] = q;
  };
  set_product(1, LS::kEmpty, LS::kEmpty, {0, 0.0, 0.0, 0, 0});
  set_product(2, LS::kEmpty, LS::kUp, {1, 0.5, 0.5, 0, 1});
  set_product(3, LS::kUp, LS::kEmpty, {1, 0.5, 0.5, 1, 0});
  set_product(4, LS::kEmpty, LS::kDown, {1, -0.5, 0.5, 0, 1});
  set_product(5, LS::kDown, LS::kEmpty, {1, -0.5, 0.5, 1, 0});
  if (variant == BasisVariant::kNssr) {
    set_product(6, LS::kPair, LS::kEmpty, {2, 0.0, 0.0, 2, 0});
    set_product(7, LS::kEmpty, LS::kPair, {2, 0.0, 0.0, 0, 2});
  } else {
    // Local-parity eigenstates replacing the two doubly occupied products.
    basis.vectors_(pair_index(LS::kEmpty, LS::kPair), 5) = h;
    basis.vectors_(pair_index(LS::kPair, LS::kEmpty), 5) = -h;
    basis.vectors_(pair_index(LS::kEmpty, LS::kPair), 6) = h;
    basis.vectors_(pair_index(LS::kPair, LS::kEmpty), 6) = h;
    basis.labels_[5] = {2, 0.0, 0.0, std::nullopt, std::nullopt};
    basis.labels_[6] = {2, 0.0, 0.0, std::nullopt, std::nullopt};
  }
  basis.vectors_(pair_index(LS::kUp, LS::kDown), 7) = h;
  basis.vectors_(pair_index(LS::kDown, LS::kUp), 7) = -h;
  basis.labels_[7] = {2, 0.0, 0.0, 1, 1};
  basis.vectors_(pair_index(LS::kUp, LS::kDown), 8) = h;
  basis.vectors_(pair_index(LS::kDown, LS::kUp), 8) = h;
  basis.labels_[8] = {2, 0.0, 1.0, 1, 1};
  set_product(10, LS::kUp, LS::kUp, {2, 1.0, 1.0, 1, 1});
  set_product(11, LS::kDown, LS::kDown, {2, -1.0, 1.0, 1, 1});
  set_product(12, LS::kPair, LS::kUp, {3, 0.5, 0.5, 2, 1});
  set_product(13, LS::kUp, LS::kPair, {3, 0.5, 0.5, 1, 2});
  set_product(14, LS::kPair, LS::kDown, {3, -0.5, 0.5, 2, 1});
  set_product(15, LS::kDown, LS::kPair, {3, -0.5, 0.5, 1, 2});
  set_product(16, LS::kPair, LS::kPair, {4, 0.0, 0.0, 2, 2});
  return basis;
}

const SymmetryEigenbasis& nssr_basis() {
  static const SymmetryEigenbasis basis = build_symmetry_basis(BasisVariant::kNssr);
  return basis;
}

const SymmetryEigenbasis& pssr_basis() {
  static const SymmetryEigenbasis basis = build_symmetry_basis(BasisVariant::kPssr);
  return basis;
}

Matrix16 partial_transpose(const TwoOrbitalState& rho) {
  return partial_transpose(rho.matrix(), kLocalDim, kLocalDim);
}

namespace {

struct KeptLayout {
  std::vector<int> modes;       // kept modes in output order
  std::uint64_t mask = 0;
  int n_kept = 0;
};

KeptLayout kept_layout(int n_orbitals, std::span<const int> keep) {
  if (n_orbitals < 1 || n_orbitals > 16)
    throw InvalidArgument("number of orbitals out of range");
  if (keep.empty()) throw InvalidArgument("no orbitals to keep");
  KeptLayout layout;
  for (std::size_t t = 0; t < keep.size(); ++t) {
    const int k = keep[t];
    if (k < 0 || k >= n_orbitals)
      throw InvalidArgument("orbital index " + std::to_string(k) + " out of range");
    for (std::size_t s = 0; s < t; ++s)
      if (keep[s] == k) throw InvalidArgument("kept orbitals must be distinct");
    layout.modes.push_back(2 * k);
    layout.modes.push_back(2 * k + 1);
    layout.mask |= std::uint64_t{3} << (2 * k);
  }
  layout.n_kept = static_cast<int>(keep.size());
  return layout;
}

Eigen::Index kept_index(std::uint64_t bits, const KeptLayout& layout) {
  std::uint64_t bits_kept = 0;
  for (std::size_t t = 0; t < layout.modes.size(); ++t)
    if ((bits >> layout.modes[t]) & 1) bits_kept |= std::uint64_t{1} << t;
  return static_cast<Eigen::Index>(bits_to_product_index(bits_kept, layout.n_kept));
}

struct EnvEntry {
  Eigen::Index kept;
  Eigen::Index full;
  int sign;
};

std::unordered_map<std::uint64_t, std::vector<EnvEntry>> group_by_environment(
    Eigen::Index dim, int n_orbitals, const KeptLayout& layout) {
  std::unordered_map<std::uint64_t, std::vector<EnvEntry>> groups;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::uint64_t bits = product_index_to_bits(i, n_orbitals);
    groups[bits & ~layout.mask].push_back(
        {kept_index(bits, layout), i, reorder_sign(bits, layout.modes)});
  }
  return groups;
}

}  // namespace

Eigen::MatrixXcd partial_trace_pure(const Eigen::Ref<const Eigen::VectorXcd>& psi,
                                    int n_orbitals, std::span<const int> keep) {
  const KeptLayout layout = kept_layout(n_orbitals, keep);
  const Eigen::Index dim = static_cast<Eigen::Index>(pow4(n_orbitals));
  if (psi.size() != dim) throw InvalidArgument("state vector has wrong dimension");
  const Eigen::Index out_dim = static_cast<Eigen::Index>(pow4(layout.n_kept));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  for (const auto& [env, entries] : group_by_environment(dim, n_orbitals, layout)) {
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(out_dim);
    for (const EnvEntry& e : entries) amp(e.kept) = static_cast<double>(e.sign) * psi(e.full);
    out.noalias() += amp * amp.adjoint();
  }
  return out;
}

Eigen::MatrixXcd partial_trace(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                               int n_orbitals, std::span<const int> keep) {
  const KeptLayout layout = kept_layout(n_orbitals, keep);
  const Eigen::Index dim = static_cast<Eigen::Index>(pow4(n_orbitals));
  if (rho.rows() != dim || rho.cols() != dim)
    throw InvalidArgument("density matrix has wrong dimension");
  const Eigen::Index out_dim = static_cast<Eigen::Index>(pow4(layout.n_kept));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
  for (const auto& [env, entries] : group_by_environment(dim, n_orbitals, layout))
    for (const EnvEntry& r : entries)
      for (const EnvEntry& c : entries)
        out(r.kept, c.kept) += static_cast<double>(r.sign * c.sign) * rho(r.full, c.full);
  return out;
}

TwoOrbitalState reduced_pair_state_pure(const Eigen::Ref<const Eigen::VectorXcd>& psi,
                                        int n_orbitals, int i, int j) {
  const std::array<int, 2> keep{i, j};
  const Eigen::MatrixXcd rho = partial_trace_pure(psi, n_orbitals, keep);
  const double tr = rho.trace().real();
  if (!(tr > 0.0)) throw InvalidArgument("state vector has zero norm");
  return TwoOrbitalState::from_matrix(rho / tr, StateTolerances{1e-12, 1e-12, -1e-10});
}

TwoOrbitalState reduced_pair_state(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                                   int n_orbitals, int i, int j) {
  const std::array<int, 2> keep{i, j};
  return TwoOrbitalState::from_matrix(partial_trace(rho, n_orbitals, keep));
}

Matrix4c marginal_a(const TwoOrbitalState& rho) {
  const std::array<int, 1> keep{0};
  return partial_trace(rho.matrix(), 2, keep);
}

Matrix4c marginal_b(const TwoOrbitalState& rho) {
  const std::array<int, 1> keep{1};
  return partial_trace(rho.matrix(), 2, keep);
}

double relative_entropy(const Eigen::Ref<const Eigen::MatrixXcd>& rho,
                        const Eigen::Ref<const Eigen::MatrixXcd>& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw InvalidArgument("relative entropy of matrices with different shapes");
  validate_state(rho);
  validate_state(sigma);
  const Eigen::MatrixXcd rho_h = 0.5 * (rho + rho.adjoint());
  const Eigen::MatrixXcd sigma_h = 0.5 * (sigma + sigma.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es_sigma(sigma_h);
  double cross = 0.0;
  for (Eigen::Index j = 0; j < sigma_h.rows(); ++j) {
    const double mu = es_sigma.eigenvalues()(j);
    const auto v = es_sigma.eigenvectors().col(j);
    const double weight = (v.adjoint() * rho_h * v)(0, 0).real();
    if (mu <= kSupportCutoff) {
      if (weight > 1e-12) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log(mu);
  }
  return -von_neumann_entropy(rho_h) - cross;
}

double von_neumann_entropy(const Eigen::Ref<const Eigen::MatrixXcd>& rho) {
  const Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lambda = es.eigenvalues()(i);
    if (lambda > kSupportCutoff) s -= lambda * std::log(lambda);
  }
  return s;
}

}  // namespace orbent
