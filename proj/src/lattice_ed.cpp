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

#include "orbent/lattice_ed.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <random>
#include <thread>
#include <unordered_map>

#include "orbent/ssr.hpp"

namespace orbent {

ChainSpec ChainSpec::half_filled(int length, double u, double v, Boundary boundary) {
  ChainSpec spec;
  spec.length = length;
  spec.n_up = length / 2;
  spec.n_down = length / 2;
  spec.boundary = boundary;
  spec.u = u;
  spec.v = v;
  return spec;
}

void ChainSpec::validate() const {
  if (length < 2 || length > kMaxChainLength)
    throw InvalidArgument("chain length must lie in [2, " + std::to_string(kMaxChainLength) + "]");
  if (n_up < 0 || n_up > length || n_down < 0 || n_down > length)
    throw InvalidArgument("particle numbers must lie in [0, L]");
  if (!std::isfinite(t_hop) || !std::isfinite(u) || !std::isfinite(v))
    throw InvalidArgument("model parameters must be finite");
}

namespace {

std::vector<std::uint32_t> combinations(int length, int count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << length); ++m)
    if (std::popcount(m) == count) out.push_back(m);
  return out;
}

std::vector<std::int32_t> ranks(int length, const std::vector<std::uint32_t>& states) {
  std::vector<std::int32_t> r(std::size_t{1} << length, -1);
  for (std::size_t k = 0; k < states.size(); ++k) r[states[k]] = static_cast<std::int32_t>(k);
  return r;
}

std::uint64_t interleave(std::uint32_t up, std::uint32_t down, int length) {
  std::uint64_t bits = 0;
  for (int i = 0; i < length; ++i) {
    bits |= static_cast<std::uint64_t>((up >> i) & 1) << (2 * i);
    bits |= static_cast<std::uint64_t>((down >> i) & 1) << (2 * i + 1);
  }
  return bits;
}

// Sign of c^dag_p c_q on `bits` (q occupied, p empty, p != q).
int hop_sign(std::uint64_t bits, int p, int q) {
  const int lo = std::min(p, q), hi = std::max(p, q);
  const std::uint64_t between = ((std::uint64_t{1} << hi) - 1) & ~((std::uint64_t{1} << (lo + 1)) - 1);
  return std::popcount(bits & between) % 2 ? -1 : 1;
}

std::vector<std::pair<int, int>> bonds(const ChainSpec& spec) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < spec.length; ++i) out.emplace_back(i, i + 1);
  if (spec.boundary == Boundary::kPeriodic && spec.length > 2)
    out.emplace_back(spec.length - 1, 0);
  return out;
}

}  // namespace

SectorBasis::SectorBasis(int length, int n_up, int n_down) : length_(length) {
  if (length < 1 || length > kMaxChainLength) throw InvalidArgument("chain length out of range");
  if (n_up < 0 || n_up > length || n_down < 0 || n_down > length)
    throw InvalidArgument("particle numbers must lie in [0, L]");
  up_ = combinations(length, n_up);
  down_ = combinations(length, n_down);
  up_rank_ = ranks(length, up_);
  down_rank_ = ranks(length, down_);
}

std::uint64_t SectorBasis::mode_bits(std::size_t k) const {
  return interleave(up_bits(k), down_bits(k), length_);
}

std::optional<std::size_t> SectorBasis::index(std::uint32_t up, std::uint32_t down) const {
  if (up >= up_rank_.size() || down >= down_rank_.size()) return std::nullopt;
  const std::int32_t ru = up_rank_[up], rd = down_rank_[down];
  if (ru < 0 || rd < 0) return std::nullopt;
  return static_cast<std::size_t>(ru) * down_.size() + static_cast<std::size_t>(rd);
}

SparseHamiltonian build_hamiltonian(const ChainSpec& spec, const SectorBasis& basis,
                                    std::size_t memory_budget) {
  spec.validate();
  if (basis.length() != spec.length) throw InvalidArgument("basis length does not match spec");
  const std::vector<std::pair<int, int>> links = bonds(spec);
  const std::size_t dim = basis.size();
  const std::size_t nnz_bound = dim * (1 + 2 * links.size());
  // Triplets during assembly plus the compressed matrix.
  const std::size_t bytes = nnz_bound * (sizeof(Eigen::Triplet<double>) + 12);
  if (bytes > memory_budget)
    throw ResourceLimit("Hamiltonian needs about " + std::to_string(bytes >> 20) +
                        " MiB, above the budget of " + std::to_string(memory_budget >> 20) +
                        " MiB");

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(nnz_bound);
  for (std::size_t k = 0; k < dim; ++k) {
    const std::uint32_t up = basis.up_bits(k), down = basis.down_bits(k);
    const std::uint64_t bits = basis.mode_bits(k);
    double diag = spec.u * std::popcount(up & down);
    for (const auto& [i, j] : links) {
      const int ni = static_cast<int>(((up >> i) & 1) + ((down >> i) & 1));
      const int nj = static_cast<int>(((up >> j) & 1) + ((down >> j) & 1));
      diag += spec.v * ni * nj;
    }
    if (diag != 0.0) triplets.emplace_back(k, k, diag);
    if (spec.t_hop == 0.0) continue;
    for (const auto& [i, j] : links) {
      for (int s = 0; s < 2; ++s) {
        const std::uint32_t occ = s == 0 ? up : down;
        const bool oi = (occ >> i) & 1, oj = (occ >> j) & 1;
        if (oi == oj) continue;
        const int from = oi ? i : j, to = oi ? j : i;
        const std::uint32_t moved = occ ^ ((1u << i) | (1u << j));
        const std::optional<std::size_t> target =
            s == 0 ? basis.index(moved, down) : basis.index(up, moved);
        const int sign = hop_sign(bits, 2 * to + s, 2 * from + s);
        triplets.emplace_back(*target, k, -spec.t_hop * sign);
      }
    }
  }
  SparseHamiltonian h(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  h.setFromTriplets(triplets.begin(), triplets.end());
  return h;
}

namespace {

void fix_sign(Eigen::VectorXd& v) {
  Eigen::Index at = 0;
  v.cwiseAbs().maxCoeff(&at);
  if (v(at) < 0.0) v = -v;
}

struct Eigenpair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
};

void project_out(Eigen::VectorXd& w, const std::vector<Eigen::VectorXd>& against) {
  for (const Eigen::VectorXd& d : against) w -= d.dot(w) * d;
}

Eigenpair lanczos_lowest(const SparseHamiltonian& h, const std::vector<Eigen::VectorXd>& deflate,
                         const EigenSettings& settings) {
  const Eigen::Index dim = h.rows();
  std::mt19937_64 rng(settings.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Eigen::VectorXd x(dim);
  for (Eigen::Index i = 0; i < dim; ++i) x(i) = uni(rng);
  project_out(x, deflate);
  project_out(x, deflate);
  x.normalize();

  Eigen::Index m = std::min<Eigen::Index>(settings.krylov_dim,
                                          dim - static_cast<Eigen::Index>(deflate.size()));
  const Eigen::Index cap = std::max<Eigen::Index>(20, (Eigen::Index{1} << 28) / std::max<Eigen::Index>(dim, 1));
  m = std::max<Eigen::Index>(1, std::min(m, cap));
  Eigen::MatrixXd v(dim, m);
  Eigenpair best;
  for (int restart = 0; restart < settings.max_restarts; ++restart) {
    Eigen::VectorXd alpha(m), beta(m);
    v.col(0) = x;
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      k = j + 1;
      Eigen::VectorXd w = h * v.col(j);
      project_out(w, deflate);
      alpha(j) = v.col(j).dot(w);
      for (int pass = 0; pass < 2; ++pass) {
        w -= v.leftCols(j + 1) * (v.leftCols(j + 1).transpose() * w);
        project_out(w, deflate);
      }
      beta(j) = w.norm();
      if (j + 1 == m || beta(j) <= 1e-13 * std::max(1.0, std::abs(alpha(j)))) break;
      v.col(j + 1) = w / beta(j);
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
      t(j, j) = alpha(j);
      if (j + 1 < k) t(j, j + 1) = t(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    x = v.leftCols(k) * es.eigenvectors().col(0);
    project_out(x, deflate);
    x.normalize();
    const double theta = x.dot(h * x);
    Eigen::VectorXd r = h * x - theta * x;
    project_out(r, deflate);
    best = {theta, x, r.norm()};
    if (best.residual <= settings.residual_tol * std::max(1.0, std::abs(theta))) return best;
  }
  throw ConvergenceError("Lanczos did not converge; residual " + std::to_string(best.residual));
}

}  // namespace

GroundState ground_state(const SparseHamiltonian& h, const EigenSettings& settings) {
  const Eigen::Index dim = h.rows();
  if (dim == 0 || h.cols() != dim) throw InvalidArgument("Hamiltonian must be square and nonempty");
  GroundState gs;
  if (static_cast<std::size_t>(dim) < settings.dense_limit) {
    const Eigen::MatrixXd dense = Eigen::MatrixXd(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    gs.energy = es.eigenvalues()(0);
    gs.amplitudes = es.eigenvectors().col(0);
    gs.gap = dim > 1 ? es.eigenvalues()(1) - gs.energy : std::numeric_limits<double>::infinity();
    gs.degenerate = gs.gap < settings.degeneracy_gap;
    if (gs.degenerate)
      for (Eigen::Index k = 0; k < dim && es.eigenvalues()(k) - gs.energy < settings.degeneracy_gap; ++k)
        gs.manifold.push_back(es.eigenvectors().col(k));
  } else {
    std::vector<Eigen::VectorXd> found;
    const Eigenpair first = lanczos_lowest(h, found, settings);
    gs.energy = first.value;
    gs.amplitudes = first.vector;
    found.push_back(first.vector);
    gs.gap = std::numeric_limits<double>::infinity();
    while (static_cast<Eigen::Index>(found.size()) < dim && found.size() < 16) {
      const Eigenpair next = lanczos_lowest(h, found, settings);
      const double gap = next.value - gs.energy;
      if (found.size() == 1) gs.gap = gap;
      if (gap >= settings.degeneracy_gap) break;
      found.push_back(next.vector);
    }
    gs.degenerate = found.size() > 1;
    if (gs.degenerate) gs.manifold = found;
  }
  fix_sign(gs.amplitudes);
  gs.amplitudes.normalize();
  gs.residual = (h * gs.amplitudes - gs.energy * gs.amplitudes).norm();
  return gs;
}

ChainGroundState solve_chain(const ChainSpec& spec, const EigenSettings& settings,
                             bool allow_degenerate) {
  spec.validate();
  SectorBasis basis(spec.length, spec.n_up, spec.n_down);
  const SparseHamiltonian h = build_hamiltonian(spec, basis);
  GroundState gs = ground_state(h, settings);
  if (gs.degenerate && !allow_degenerate)
    throw DegenerateGroundState("ground state is degenerate (gap " + std::to_string(gs.gap) +
                                "); request the symmetrized mixture explicitly");
  return {spec, std::move(basis), std::move(gs)};
}

TwoOrbitalState two_orbital_rdm(const SectorBasis& basis, const Eigen::VectorXd& psi, int i,
                                int j) {
  const int length = basis.length();
  if (i < 0 || j < 0 || i >= length || j >= length)
    throw InvalidArgument("site index out of range");
  if (i == j) throw InvalidArgument("pair sites must differ");
  if (static_cast<std::size_t>(psi.size()) != basis.size())
    throw InvalidArgument("state does not match the sector basis");
  const std::array<int, 4> kept{2 * i, 2 * i + 1, 2 * j, 2 * j + 1};
  std::uint64_t mask = 0;
  for (int mode : kept) mask |= std::uint64_t{1} << mode;
  std::unordered_map<std::uint64_t, std::vector<std::pair<int, double>>> groups;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (psi(static_cast<Eigen::Index>(k)) == 0.0) continue;
    const std::uint64_t bits = basis.mode_bits(k);
    auto bit = [&](int mode) { return static_cast<int>((bits >> mode) & 1); };
    const int local_i = bit(kept[0]) + 2 * bit(kept[1]);
    const int local_j = bit(kept[2]) + 2 * bit(kept[3]);
    const int sign = reorder_sign(bits, kept);
    groups[bits & ~mask].emplace_back(4 * local_i + local_j,
                                      sign * psi(static_cast<Eigen::Index>(k)));
  }
  Eigen::Matrix<double, 16, 16> rho = Eigen::Matrix<double, 16, 16>::Zero();
  for (const auto& [env, entries] : groups)
    for (const auto& [a, x] : entries)
      for (const auto& [b, y] : entries) rho(a, b) += x * y;
  return TwoOrbitalState::from_matrix(rho.cast<Complex>());
}

TwoOrbitalState two_orbital_rdm(const ChainGroundState& gs, int i, int j) {
  if (!gs.state.degenerate) return two_orbital_rdm(gs.basis, gs.state.amplitudes, i, j);
  Matrix16 mix = Matrix16::Zero();
  for (const Eigen::VectorXd& v : gs.state.manifold)
    mix += two_orbital_rdm(gs.basis, v, i, j).matrix();
  mix /= static_cast<double>(gs.state.manifold.size());
  return TwoOrbitalState::from_matrix(mix);
}

double spin_squared_expectation(const SectorBasis& basis, const Eigen::VectorXd& psi) {
  const std::size_t n_up = static_cast<std::size_t>(std::popcount(basis.up_bits(0)));
  const std::size_t n_down = static_cast<std::size_t>(std::popcount(basis.down_bits(0)));
  const double sz = 0.5 * (static_cast<double>(n_up) - static_cast<double>(n_down));
  // S^+ = sum_i c^dag_{i up} c_{i down}; adjacent modes, so no string sign.
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> raised;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double a = psi(static_cast<Eigen::Index>(k));
    if (a == 0.0) continue;
    const std::uint32_t up = basis.up_bits(k), down = basis.down_bits(k);
    for (int i = 0; i < basis.length(); ++i)
      if (((down >> i) & 1) && !((up >> i) & 1))
        raised[{up | (1u << i), down & ~(1u << i)}] += a;
  }
  double norm2 = 0.0;
  for (const auto& [key, a] : raised) norm2 += a * a;
  return sz * (sz + 1.0) + norm2;
}

Eigen::MatrixXd one_body_rdm(const SectorBasis& basis, const Eigen::VectorXd& psi) {
  const int length = basis.length();
  Eigen::MatrixXd gamma = Eigen::MatrixXd::Zero(length, length);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double a = psi(static_cast<Eigen::Index>(k));
    if (a == 0.0) continue;
    const std::uint32_t up = basis.up_bits(k), down = basis.down_bits(k);
    const std::uint64_t bits = basis.mode_bits(k);
    for (int s = 0; s < 2; ++s) {
      const std::uint32_t occ = s == 0 ? up : down;
      for (int j = 0; j < length; ++j) {
        if (!((occ >> j) & 1)) continue;
        gamma(j, j) += a * a;
        for (int i = 0; i < length; ++i) {
          if ((occ >> i) & 1) continue;
          const std::uint32_t moved = occ ^ ((1u << i) | (1u << j));
          const std::optional<std::size_t> t =
              s == 0 ? basis.index(moved, down) : basis.index(up, moved);
          const int sign = hop_sign(bits, 2 * i + s, 2 * j + s);
          gamma(i, j) += psi(static_cast<Eigen::Index>(*t)) * sign * a;
        }
      }
    }
  }
  return gamma;
}

NaturalOrbitals natural_orbitals(const SectorBasis& basis, const Eigen::VectorXd& psi) {
  const Eigen::MatrixXd gamma = one_body_rdm(basis, psi);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (gamma + gamma.transpose()));
  const Eigen::Index n = gamma.rows();
  NaturalOrbitals out;
  out.occupations.resize(n);
  out.orbitals.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.occupations(k) = es.eigenvalues()(n - 1 - k);
    Eigen::VectorXd col = es.eigenvectors().col(n - 1 - k);
    fix_sign(col);
    out.orbitals.col(k) = col;
  }
  return out;
}

namespace {

// (-1)^(number of (down at i, up at j) pairs with i < j): interleaved versus
// all-up-then-all-down creation order.
double species_order_sign(std::uint32_t up, std::uint32_t down) {
  int count = 0;
  for (int j = 0; j < 32; ++j)
    if ((up >> j) & 1) count += std::popcount(down & ((1u << j) - 1));
  return count % 2 ? -1.0 : 1.0;
}

Eigen::MatrixXd determinant_table(const std::vector<std::uint32_t>& states,
                                  const Eigen::MatrixXd& m) {
  const Eigen::Index n = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd out(n, n);
  if (n == 0) return out;
  const int count = std::popcount(states[0]);
  auto members = [](std::uint32_t s) {
    std::vector<Eigen::Index> idx;
    for (int i = 0; i < 32; ++i)
      if ((s >> i) & 1) idx.push_back(i);
    return idx;
  };
  for (Eigen::Index a = 0; a < n; ++a) {
    const std::vector<Eigen::Index> rows = members(states[a]);
    for (Eigen::Index b = 0; b < n; ++b) {
      if (count == 0) {
        out(a, b) = 1.0;
        continue;
      }
      const std::vector<Eigen::Index> cols = members(states[b]);
      Eigen::MatrixXd sub(count, count);
      for (int r = 0; r < count; ++r)
        for (int c = 0; c < count; ++c) sub(r, c) = m(rows[r], cols[c]);
      out(a, b) = sub.determinant();
    }
  }
  return out;
}

}  // namespace

Eigen::VectorXd rotate_orbitals(const SectorBasis& basis, const Eigen::VectorXd& psi,
                                const Eigen::MatrixXd& m) {
  const int length = basis.length();
  if (m.rows() != length || m.cols() != length)
    throw InvalidArgument("orbital matrix must be L x L");
  if ((m.transpose() * m - Eigen::MatrixXd::Identity(length, length)).norm() > 1e-10)
    throw InvalidArgument("orbital matrix must be orthogonal");
  const std::size_t nu = basis.n_up_states(), nd = basis.n_down_states();
  std::vector<std::uint32_t> ups(nu), downs(nd);
  for (std::size_t a = 0; a < nu; ++a) ups[a] = basis.up_bits(a * nd);
  for (std::size_t b = 0; b < nd; ++b) downs[b] = basis.down_bits(b);
  Eigen::MatrixXd grid(nu, nd);
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = 0; b < nd; ++b)
      grid(a, b) = species_order_sign(ups[a], downs[b]) * psi(a * nd + b);
  // c^dag_i = sum_k m_ik c'^dag_k, so |S> = sum_S' det m[S, S'] |S'>.
  const Eigen::MatrixXd rotated =
      determinant_table(ups, m).transpose() * grid * determinant_table(downs, m);
  Eigen::VectorXd out(psi.size());
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = 0; b < nd; ++b)
      out(a * nd + b) = species_order_sign(ups[a], downs[b]) * rotated(a, b);
  return out;
}

int configured_threads() {
  if (const char* env = std::getenv("ORBENT_NUM_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= 256) return static_cast<int>(n);
    throw InvalidArgument("ORBENT_NUM_THREADS must be an integer in [1, 256]");
  }
  return 1;
}

std::vector<BondScanPoint> bond_scan(const BondScanConfig& config) {
  if (config.length % 2 != 0) throw InvalidArgument("bond scan needs an even chain length");
  if (config.pivot < 1 || config.pivot > config.length - 2)
    throw InvalidArgument("pivot must have neighbors on both sides");
  std::vector<std::pair<double, double>> grid;
  for (double u : config.u_values)
    for (double v : config.v_values) grid.emplace_back(u, v);
  std::vector<BondScanPoint> out(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  EvaluationOptions options;
  options.ssr = Ssr::kN;
  options.tol = config.tol;
  options.oracle_fallback = true;
  const bool left_strong = (config.pivot - 1) % 2 == 0;

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t k = next++; k < grid.size(); k = next++) {
      try {
        ChainSpec spec =
            ChainSpec::half_filled(config.length, grid[k].first, grid[k].second, config.boundary);
        spec.t_hop = config.t_hop;
        const ChainGroundState gs = solve_chain(spec);
        BondScanPoint& p = out[k];
        p.u = grid[k].first;
        p.v = grid[k].second;
        p.energy = gs.state.energy;
        p.spin_squared = spin_squared_expectation(gs.basis, gs.state.amplitudes);
        p.e_left =
            evaluate_entanglement(two_orbital_rdm(gs, config.pivot - 1, config.pivot), options).value;
        p.e_right =
            evaluate_entanglement(two_orbital_rdm(gs, config.pivot, config.pivot + 1), options).value;
        p.e_strong = left_strong ? p.e_left : p.e_right;
        p.e_weak = left_strong ? p.e_right : p.e_left;
        p.delta = p.e_strong - p.e_weak;
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int threads = config.threads > 0 ? config.threads : configured_threads();
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

DimerAnalytics dimer_analytics(double u, double v, double t_hop) {
  if (!(t_hop > 0.0)) throw InvalidArgument("dimer analytics need t_hop > 0");
  DimerAnalytics d;
  d.u = u;
  d.v = v;
  d.t_hop = t_hop;
  d.energy_exact = 0.5 * ((u + v) - std::sqrt((u - v) * (u - v) + 16.0 * t_hop * t_hop));
  const double off = d.energy_exact - v;
  d.covalent_weight = 4.0 * t_hop * t_hop / (4.0 * t_hop * t_hop + off * off);
  d.entanglement_n_exact = d.covalent_weight * std::log(2.0);

  ChainSpec spec = ChainSpec::half_filled(2, u, v);
  spec.t_hop = t_hop;
  const ChainGroundState gs = solve_chain(spec);
  d.energy_ed = gs.state.energy;
  const TwoOrbitalState rho = two_orbital_rdm(gs, 0, 1);
  EvaluationOptions options;
  options.tol = 1e-8;
  options.ssr = Ssr::kN;
  d.entanglement_n = evaluate_entanglement(rho, options).value;
  options.ssr = Ssr::kP;
  d.entanglement_p = evaluate_entanglement(rho, options).value;
  d.mutual_information = mutual_information(rho);
  return d;
}

}  // namespace orbent
