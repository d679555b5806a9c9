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

#include "orbent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace orbent {

namespace {

double plogpq(double p, double q) {
  if (p <= 0.0) return 0.0;
  if (q <= 0.0) return std::numeric_limits<double>::infinity();
  return p * std::log(p / q);
}

// Sector weights: x, y on the pair states, u, v on the product states.
struct SectorWeights {
  double x = 0.0, y = 0.0, u = 0.0, v = 0.0;
};

struct SectorResult {
  SectorWeights q;
  double mu = 0.0;
  double feasibility = 0.0;
  double stationarity = 0.0;
  int iterations = 0;
};

// sqrt(q_u q_v) on the multiplier path: positive root of
// (1 - mu^2/4) g^2 - mu (u + v) g / 2 - u v = 0.
double geometric_mean_on_path(double mu, double u, double v) {
  const double a = 1.0 - 0.25 * mu * mu;
  const double half_b = 0.25 * mu * (u + v);
  return (half_b + std::sqrt(half_b * half_b + a * u * v)) / a;
}

SectorWeights weights_on_path(double mu, const SectorWeights& p) {
  const double g = geometric_mean_on_path(mu, p.u, p.v);
  return {p.x / (1.0 + 0.5 * mu), p.y / (1.0 - 0.5 * mu), p.u + 0.5 * mu * g,
          p.v + 0.5 * mu * g};
}

double constraint(const SectorWeights& q) {
  return std::sqrt(q.u * q.v) - 0.5 * (q.x - q.y);
}

double stationarity(const SectorWeights& p, const SectorWeights& q, double mu) {
  // Lagrangian sum_i (q_i - p_i ln q_i) - mu h(q), multiplied through by q_i.
  const double g = std::sqrt(q.u * q.v);
  double res = std::abs(q.x - p.x + 0.5 * mu * q.x);
  res = std::max(res, std::abs(q.y - p.y - 0.5 * mu * q.y));
  res = std::max(res, std::abs(q.u - p.u - 0.5 * mu * g));
  res = std::max(res, std::abs(q.v - p.v - 0.5 * mu * g));
  return std::max(res, std::abs(mu * constraint(q)));
}

SectorResult solve_sector(SectorWeights p, int max_iterations) {
  if (p.y > p.x) {
    std::swap(p.x, p.y);
    SectorResult r = solve_sector(p, max_iterations);
    std::swap(r.q.x, r.q.y);
    return r;
  }
  SectorResult r;
  const double half = 0.5 * (p.x - p.y);
  if (p.u * p.v >= half * half) {
    r.q = p;
    return r;
  }
  if (p.y == 0.0 && p.u == 0.0 && p.v == 0.0) {
    // Multiplier diverges; the minimum sits at the corner (x/2, x/2, 0, 0).
    r.q = {0.5 * p.x, 0.5 * p.x, 0.0, 0.0};
    r.mu = 2.0;
    return r;
  }
  double lo = 0.0;
  double hi = 2.0;
  int it = 0;
  while (it < max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++it;
    if (constraint(weights_on_path(mid, p)) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  r.iterations = it;
  r.mu = hi;
  r.q = weights_on_path(hi, p);
  const double violation = 0.25 * (r.q.x - r.q.y) * (r.q.x - r.q.y) - r.q.u * r.q.v;
  r.feasibility = std::max(0.0, violation);
  r.stationarity = stationarity(p, r.q, hi);
  return r;
}

constexpr std::array<int, 4> kSectorM{7, 8, 9, 10};
constexpr std::array<int, 4> kSectorMprime{5, 6, 0, 15};

}  // namespace

ConstrainedSimplexProblem ConstrainedSimplexProblem::from_spectrum(
    const SectorSpectrum& spectrum, Ssr ssr) {
  if (spectrum.variant != basis_variant(ssr))
    throw InvalidArgument("spectrum basis does not match the superselection rule");
  ConstrainedSimplexProblem problem;
  problem.p = spectrum.weights;
  problem.constrain_m = true;
  problem.constrain_mprime = ssr == Ssr::kP;
  return problem;
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InvalidArgument("distribution sizes differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += plogpq(p[i], q[i]);
  return sum;
}

OracleSolution kl_min_oracle(const ConstrainedSimplexProblem& problem,
                             const OracleSettings& settings) {
  std::array<double, 16> p = problem.p;
  double total = 0.0;
  for (double& w : p) {
    if (w < -1e-12) throw InvalidArgument("negative target weight");
    w = std::max(w, 0.0);
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) throw InvalidArgument("target weights do not sum to 1");

  OracleSolution sol;
  sol.q = p;
  auto run = [&](const std::array<int, 4>& idx) {
    const SectorWeights w{p[idx[0]], p[idx[1]], p[idx[2]], p[idx[3]]};
    const SectorResult r = solve_sector(w, settings.max_iterations);
    sol.q[idx[0]] = r.q.x;
    sol.q[idx[1]] = r.q.y;
    sol.q[idx[2]] = r.q.u;
    sol.q[idx[3]] = r.q.v;
    sol.feasibility_residual = std::max(sol.feasibility_residual, r.feasibility);
    sol.stationarity_residual = std::max(sol.stationarity_residual, r.stationarity);
    sol.iterations += r.iterations;
  };
  if (problem.constrain_m) run(kSectorM);
  if (problem.constrain_mprime) run(kSectorMprime);

  double q_total = 0.0;
  for (double q : sol.q) q_total += q;
  sol.feasibility_residual = std::max(sol.feasibility_residual, std::abs(q_total - 1.0));
  sol.value = kl_divergence(p, sol.q);
  sol.converged = sol.feasibility_residual <= settings.feasibility_tol &&
                  sol.stationarity_residual <= settings.stationarity_tol;
  if (!sol.converged)
    sol.message = "residuals above tolerance: feasibility " +
                  std::to_string(sol.feasibility_residual) + ", stationarity " +
                  std::to_string(sol.stationarity_residual);
  return sol;
}

PptResult ppt_oracle(const TwoOrbitalState& rho) {
  const Matrix16 pt = partial_transpose(rho);
  Eigen::SelfAdjointEigenSolver<Matrix16> es(pt, Eigen::EigenvaluesOnly);
  const double lowest = es.eigenvalues()(0);
  return {lowest >= kPptThreshold, lowest};
}

namespace {

// Real 2x2 block [[d1, z], [z, d2]].
struct Block {
  double d1 = 0.0, d2 = 0.0, z = 0.0;

  Eigen::Matrix2d matrix() const {
    Eigen::Matrix2d m;
    m << d1, z, z, d2;
    return m;
  }
  bool positive() const { return d1 > 0.0 && d2 > 0.0 && d1 * d2 - z * z > 0.0; }
};

double divided_log(double a, double b) {
  if (std::abs(a - b) <= 1e-12 * std::max(a, b)) return 2.0 / (a + b);
  return (std::log(a) - std::log(b)) / (a - b);
}

// -Tr(B ln S) + d1 + d2 + mu z and its gradient in (d1, d2, z).
struct InnerObjective {
  Eigen::Matrix2d b;
  double mu = 0.0;

  double value(const Block& s) const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(s.matrix());
    const Eigen::Matrix2d bt = es.eigenvectors().transpose() * b * es.eigenvectors();
    const Eigen::Vector2d lam = es.eigenvalues();
    return -(bt(0, 0) * std::log(lam(0)) + bt(1, 1) * std::log(lam(1))) + s.d1 + s.d2 +
           mu * s.z;
  }

  Eigen::Vector3d gradient(const Block& s) const {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(s.matrix());
    const Eigen::Matrix2d& v = es.eigenvectors();
    const Eigen::Vector2d lam = es.eigenvalues();
    Eigen::Matrix2d bt = v.transpose() * b * v;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) bt(i, j) *= divided_log(lam(i), lam(j));
    const Eigen::Matrix2d g = v * bt * v.transpose();
    return {1.0 - g(0, 0), 1.0 - g(1, 1), mu - 2.0 * g(0, 1)};
  }
};

Block step(const Block& s, const Eigen::Vector3d& d, double t) {
  return {s.d1 + t * d(0), s.d2 + t * d(1), s.z + t * d(2)};
}

struct InnerResult {
  Block block;
  double gradient_norm = 0.0;
  int iterations = 0;
};

// Damped Newton with a finite-difference Hessian of the analytic gradient.
InnerResult minimize_block(const InnerObjective& f, Block s) {
  InnerResult out;
  Eigen::Vector3d g = f.gradient(s);
  for (int it = 0; it < 200; ++it) {
    out.iterations = it + 1;
    if (g.lpNorm<Eigen::Infinity>() < 1e-14) break;
    const double scale = std::max({s.d1, s.d2, std::abs(s.z)});
    Eigen::Matrix3d hess;
    for (int k = 0; k < 3; ++k) {
      Eigen::Vector3d e = Eigen::Vector3d::Zero();
      const double h = 1e-6 * scale;
      e(k) = h;
      Block plus = step(s, e, 1.0), minus = step(s, e, -1.0);
      if (!plus.positive() || !minus.positive()) {
        hess.col(k) = (f.gradient(step(s, e, 1e-3)) - g) / (1e-3 * h);
      } else {
        hess.col(k) = (f.gradient(plus) - f.gradient(minus)) / (2.0 * h);
      }
    }
    hess = 0.5 * (hess + hess.transpose()).eval();
    Eigen::Vector3d d;
    Eigen::LLT<Eigen::Matrix3d> llt(hess);
    if (llt.info() == Eigen::Success)
      d = -llt.solve(g);
    else
      d = -g;
    const double f0 = f.value(s);
    const double g_norm = g.norm();
    // Near the optimum the decrease in f drops below rounding, so a step that
    // keeps f flat to machine precision is accepted when it shrinks the gradient.
    auto acceptable = [&](const Block& trial, double t_trial) {
      if (!trial.positive()) return false;
      const double f1 = f.value(trial);
      if (f1 <= f0 + 1e-4 * t_trial * g.dot(d)) return true;
      return std::abs(f1 - f0) <= 1e-13 * (1.0 + std::abs(f0)) &&
             f.gradient(trial).norm() < g_norm;
    };
    double t = 1.0;
    Block next = step(s, d, t);
    while (t > 1e-20 && !acceptable(next, t)) {
      t *= 0.5;
      next = step(s, d, t);
    }
    if (t <= 1e-20) break;
    s = next;
    g = f.gradient(s);
  }
  out.block = s;
  out.gradient_norm = g.lpNorm<Eigen::Infinity>();
  return out;
}

double entropy_term(const Eigen::Matrix2d& b) {
  // Tr(B ln B) with 0 ln 0 = 0.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(b, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (int i = 0; i < 2; ++i) {
    const double l = es.eigenvalues()(i);
    if (l > kSupportCutoff) sum += l * std::log(l);
  }
  return sum;
}

double cross_term(const Eigen::Matrix2d& b, const Block& s) {
  // Tr(B ln S).
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(s.matrix());
  const Eigen::Matrix2d bt = es.eigenvectors().transpose() * b * es.eigenvectors();
  return bt(0, 0) * std::log(es.eigenvalues()(0)) + bt(1, 1) * std::log(es.eigenvalues()(1));
}

}  // namespace

CoherentSectorSolution coherent_sector_oracle(const CoherentSectorProblem& problem,
                                              const OracleSettings& settings) {
  const double pu = std::max(problem.p_u, 0.0);
  const double pv = std::max(problem.p_v, 0.0);
  const Complex w = problem.block(0, 1);
  const double aw = std::abs(w);
  const Complex phase = aw > 0.0 ? w / aw : Complex(1.0);
  Eigen::Matrix2d b;
  b << problem.block(0, 0).real(), aw, aw, problem.block(1, 1).real();

  CoherentSectorSolution sol;
  sol.q_u = pu;
  sol.q_v = pv;
  sol.block = problem.block;
  if (aw * aw <= pu * pv) {
    sol.converged = true;
    return sol;
  }
  auto finish = [&](const Block& s, double mu, double g) {
    sol.q_u = pu + 0.5 * mu * g;
    sol.q_v = pv + 0.5 * mu * g;
    sol.block << s.d1, s.z * phase, s.z * std::conj(phase), s.d2;
    sol.value = plogpq(pu, sol.q_u) + plogpq(pv, sol.q_v) + entropy_term(b) - cross_term(b, s);
    const double violation = s.z * s.z - sol.q_u * sol.q_v;
    sol.feasibility_residual = std::max(0.0, violation);
  };
  if (pu == 0.0 && pv == 0.0) {
    // Only a vanishing coherence is feasible; the optimum is the dephased block.
    const Block s{b(0, 0), b(1, 1), 0.0};
    finish(s, 0.0, 0.0);
    sol.converged = true;
    return sol;
  }

  const Block start{b(0, 0), b(1, 1), 0.5 * aw};
  double lo = 0.0, hi = 2.0;
  InnerResult at_hi;
  bool have_hi = false;
  int it = 0;
  while (it < settings.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++it;
    const InnerResult inner = minimize_block({b, mid}, start);
    sol.iterations += inner.iterations;
    const double g = geometric_mean_on_path(mid, pu, pv);
    if (g - inner.block.z >= 0.0) {
      hi = mid;
      at_hi = inner;
      have_hi = true;
    } else {
      lo = mid;
    }
  }
  if (!have_hi) at_hi = minimize_block({b, hi}, start);
  const double g = geometric_mean_on_path(hi, pu, pv);
  finish(at_hi.block, hi, g);
  const double ru = std::abs(sol.q_u - pu - 0.5 * hi * g);
  const double rv = std::abs(sol.q_v - pv - 0.5 * hi * g);
  sol.stationarity_residual =
      std::max({at_hi.gradient_norm, ru, rv, std::abs(hi * (g - at_hi.block.z))});
  sol.converged = sol.stationarity_residual <= settings.stationarity_tol &&
                  sol.feasibility_residual <= settings.feasibility_tol;
  return sol;
}

CoherentEntanglement coherent_entanglement_oracle(const TwoOrbitalState& projected, Ssr ssr,
                                                  const OracleSettings& settings) {
  const SymmetryReport report = detect_symmetries(projected);
  if (!report.spin_z.holds)
    throw InsufficientSymmetry("coherent oracle needs Sz symmetry");
  if (ssr == Ssr::kP && !report.particle_number.holds)
    throw InsufficientSymmetry("coherent P-SSR oracle needs particle-number symmetry");
  const TwoOrbitalState rho = ssr_project(projected, ssr);
  const Matrix16& m = rho.matrix();
  using LS = LocalState;
  auto sector = [&](int u, int v, int e1, int e2) {
    CoherentSectorProblem p;
    p.p_u = m(u, u).real();
    p.p_v = m(v, v).real();
    p.block << m(e1, e1), m(e1, e2), m(e2, e1), m(e2, e2);
    return coherent_sector_oracle(p, settings);
  };
  CoherentEntanglement out;
  const CoherentSectorSolution sm =
      sector(pair_index(LS::kUp, LS::kUp), pair_index(LS::kDown, LS::kDown),
             pair_index(LS::kUp, LS::kDown), pair_index(LS::kDown, LS::kUp));
  out.value = sm.value;
  out.converged = sm.converged;
  out.stationarity_residual = sm.stationarity_residual;
  if (ssr == Ssr::kP) {
    const CoherentSectorSolution sp =
        sector(pair_index(LS::kEmpty, LS::kEmpty), pair_index(LS::kPair, LS::kPair),
               pair_index(LS::kEmpty, LS::kPair), pair_index(LS::kPair, LS::kEmpty));
    out.value += sp.value;
    out.converged = out.converged && sp.converged;
    out.stationarity_residual = std::max(out.stationarity_residual, sp.stationarity_residual);
  }
  return out;
}

}  // namespace orbent
