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

#include "orbent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "orbent/oracle.hpp"

namespace orbent {

namespace {

constexpr double kNegativeWeight = -1e-12;

double xlogx_ratio(double p, double q) {
  if (p <= 0.0) return 0.0;
  if (q <= 0.0) return std::numeric_limits<double>::infinity();
  return p * std::log(p / q);
}

// One two-qubit-like sector: x, y are the weights of the entangled pair
// (Psi_8/Psi_9 or Psi_6/Psi_7), u, v those of the product states.
struct Quad {
  double x = 0.0, y = 0.0, u = 0.0, v = 0.0;
};

void check_nonnegative(const Quad& w) {
  for (double p : {w.x, w.y, w.u, w.v})
    if (p < kNegativeWeight) throw InvalidArgument("negative sector weight");
}

Quad clamp(Quad w) {
  w.x = std::max(w.x, 0.0);
  w.y = std::max(w.y, 0.0);
  w.u = std::max(w.u, 0.0);
  w.v = std::max(w.v, 0.0);
  return w;
}

bool separable(const Quad& w) {
  const double half = 0.5 * (w.x - w.y);
  return w.u * w.v >= half * half;
}

double sector_kl(const Quad& p, const Quad& q) {
  return xlogx_ratio(p.x, q.x) + xlogx_ratio(p.y, q.y) + xlogx_ratio(p.u, q.u) +
         xlogx_ratio(p.v, q.v);
}

struct SectorSolution {
  Quad q;
  SectorDetail detail;
};

SectorSolution swapped(SectorSolution s) {
  std::swap(s.q.x, s.q.y);
  return s;
}

SectorSolution solve_symmetric(Quad p) {
  p = clamp(p);
  if (p.y > p.x) {
    std::swap(p.x, p.y);
    return swapped(solve_symmetric(p));
  }
  SectorSolution out;
  const double t = p.x;
  const double r = p.y + p.u + p.v;
  out.detail.r = r;
  out.detail.t = t;
  if (r >= t) {
    out.q = p;
    out.detail.method = SectorMethod::kSeparable;
    return out;
  }
  if (r == 0.0) {
    // Pure pair weight: the closest separable point splits it evenly between
    // the two pair states.
    out.q = {0.5 * t, 0.5 * t, 0.0, 0.0};
    out.detail.method = SectorMethod::kCorner;
    out.detail.value = t * std::log(2.0);
    return out;
  }
  const double scale = (r + t) / (2.0 * r);
  out.q = {0.5 * (r + t), scale * p.y, scale * p.u, scale * p.v};
  out.detail.method = SectorMethod::kSymmetric;
  out.detail.value = std::max(
      0.0, r * std::log(2.0 * r / (r + t)) + t * std::log(2.0 * t / (r + t)));
  return out;
}

SectorSolution solve_general(Quad p) {
  p = clamp(p);
  if (p.y > p.x) {
    std::swap(p.x, p.y);
    return swapped(solve_general(p));
  }
  SectorSolution out;
  out.detail.t = p.x;
  out.detail.r = p.y + p.u + p.v;
  if (separable(p)) {
    out.q = p;
    out.detail.method = SectorMethod::kSeparable;
    return out;
  }
  if (p.x <= 0.0 || p.y <= 0.0 || p.u <= 0.0 || p.v <= 0.0)
    throw DegenerateSector("entangled sector is rank deficient; closed formula undefined");
  const double s = p.x + p.y + p.u + p.v;
  const double a = s * s - (p.u - p.v) * (p.u - p.v);
  const double b = (p.x - p.y) * s;
  const double uv = p.u * p.v;
  const double c = (p.u + p.v) * (p.u + p.v) * (p.x - p.y) * (p.x - p.y) +
                   8.0 * uv * (2.0 * uv + (p.u + p.v) * (p.x + p.y) + 2.0 * p.x * p.y);
  const double root = std::sqrt(std::max(c, 0.0));
  Quad q;
  q.x = (a + b + root) / (4.0 * (s - p.y));
  q.y = (a - b - root) / (4.0 * (s - p.x));
  const double shift = 0.5 * (p.x + p.y - q.x - q.y);
  q.u = p.u + shift;
  q.v = p.v + shift;
  out.q = q;
  out.detail.method = SectorMethod::kGeneral;
  out.detail.value = std::max(0.0, sector_kl(p, q));
  out.detail.general_coefficients = std::array<double, 4>{a, b, c, s};
  return out;
}

Quad sector_m(const SectorSpectrum& s) { return {s.p(8), s.p(9), s.p(10), s.p(11)}; }
Quad sector_mprime(const SectorSpectrum& s) { return {s.p(6), s.p(7), s.p(1), s.p(16)}; }

void store_m(std::array<double, 16>& q, const Quad& w) {
  q[7] = w.x;
  q[8] = w.y;
  q[9] = w.u;
  q[10] = w.v;
}

void store_mprime(std::array<double, 16>& q, const Quad& w) {
  q[5] = w.x;
  q[6] = w.y;
  q[0] = w.u;
  q[15] = w.v;
}

void require_real_coherence(Complex b, double tol, const char* name) {
  if (std::abs(b.imag()) > tol)
    throw InsufficientSymmetry(std::string("imaginary coherence ") + name +
                               " disqualifies the closed formulas");
  if (std::abs(b) > tol)
    throw InsufficientSymmetry(std::string("nonzero coherence ") + name +
                               "; apply the total-spin twirl or use the oracle");
}

void check_spectrum(const SectorSpectrum& s) {
  for (double p : s.weights)
    if (p < kNegativeWeight) throw InvalidArgument("negative sector weight");
}

EntanglementResult base_result(const SectorSpectrum& s, FormulaVariant variant) {
  EntanglementResult r;
  r.variant = variant;
  r.p = s.weights;
  r.q_star = s.weights;
  for (double& q : r.q_star) q = std::max(q, 0.0);
  return r;
}

}  // namespace

std::string_view to_string(SectorMethod method) {
  switch (method) {
    case SectorMethod::kSeparable: return "separable";
    case SectorMethod::kSymmetric: return "symmetric";
    case SectorMethod::kGeneral: return "general";
    case SectorMethod::kCorner: return "corner";
  }
  return "unknown";
}

SectorSpectrum sector_spectrum(const TwoOrbitalState& projected,
                               const SymmetryEigenbasis& basis, Ssr applied) {
  if (basis.variant() != basis_variant(applied))
    throw InvalidArgument("basis variant does not match the applied superselection rule");
  SectorSpectrum s;
  s.variant = basis.variant();
  const Matrix16& m = projected.matrix();
  const Matrix16 diag = basis.vectors().adjoint() * m * basis.vectors();
  for (int i = 0; i < 16; ++i) s.weights[i] = diag(i, i).real();
  s.b = diag(7, 8);
  const SymmetryEigenbasis& pb = pssr_basis();
  s.b_prime = (pb.vector(6).adjoint() * m * pb.vector(7))(0, 0);
  return s;
}

bool is_separable_M(double p8, double p9, double p10, double p11) {
  const Quad w{p8, p9, p10, p11};
  check_nonnegative(w);
  return separable(clamp(w));
}

bool is_separable_Mprime(double p1, double p6, double p7, double p16) {
  const Quad w{p6, p7, p1, p16};
  check_nonnegative(w);
  return separable(clamp(w));
}

EntanglementResult nssr_entanglement_singlet(const SectorSpectrum& spectrum, double tol) {
  if (spectrum.variant != BasisVariant::kNssr)
    throw InvalidArgument("N-SSR formula needs the N-SSR basis spectrum");
  check_spectrum(spectrum);
  if (std::abs(spectrum.p(10) - spectrum.p(11)) > tol)
    throw InsufficientSymmetry("singlet formula needs p10 = p11");
  require_real_coherence(spectrum.b, tol, "b");
  EntanglementResult r = base_result(spectrum, FormulaVariant::kNssrSinglet);
  const SectorSolution m = solve_symmetric(sector_m(spectrum));
  store_m(r.q_star, m.q);
  r.sector_m = m.detail;
  r.value = m.detail.value;
  return r;
}

EntanglementResult nssr_entanglement_general(const SectorSpectrum& spectrum, double tol) {
  if (spectrum.variant != BasisVariant::kNssr)
    throw InvalidArgument("N-SSR formula needs the N-SSR basis spectrum");
  check_spectrum(spectrum);
  require_real_coherence(spectrum.b, tol, "b");
  EntanglementResult r = base_result(spectrum, FormulaVariant::kNssrGeneral);
  const SectorSolution m = solve_general(sector_m(spectrum));
  store_m(r.q_star, m.q);
  r.sector_m = m.detail;
  r.value = m.detail.value;
  return r;
}

EntanglementResult pssr_entanglement(const SectorSpectrum& spectrum, double tol) {
  if (spectrum.variant != BasisVariant::kPssr)
    throw InvalidArgument("P-SSR formula needs the parity basis spectrum");
  check_spectrum(spectrum);
  require_real_coherence(spectrum.b, tol, "b");
  require_real_coherence(spectrum.b_prime, tol, "b'");
  const bool symmetric = std::abs(spectrum.p(10) - spectrum.p(11)) <= tol &&
                         std::abs(spectrum.p(1) - spectrum.p(16)) <= tol;
  EntanglementResult r = base_result(
      spectrum, symmetric ? FormulaVariant::kPssrSymmetric : FormulaVariant::kPssrGeneral);
  auto solve = [&](const Quad& w) {
    return std::abs(w.u - w.v) <= tol ? solve_symmetric(w) : solve_general(w);
  };
  const SectorSolution m = solve(sector_m(spectrum));
  const SectorSolution mp = solve(sector_mprime(spectrum));
  store_m(r.q_star, m.q);
  store_mprime(r.q_star, mp.q);
  r.sector_m = m.detail;
  r.sector_mprime = mp.detail;
  r.value = m.detail.value + mp.detail.value;
  return r;
}

TwoOrbitalState closest_separable_state(const EntanglementResult& result) {
  const bool parity = result.variant == FormulaVariant::kPssrSymmetric ||
                      result.variant == FormulaVariant::kPssrGeneral;
  const SymmetryEigenbasis& basis = parity ? pssr_basis() : nssr_basis();
  Eigen::Matrix<double, 16, 1> q;
  for (int i = 0; i < 16; ++i) q(i) = result.q_star[i];
  const Matrix16 sigma =
      basis.vectors() * q.cast<Complex>().asDiagonal() * basis.vectors().adjoint();
  return TwoOrbitalState::from_matrix(sigma, {1e-10, 1e-10, -1e-10});
}

namespace {

EntanglementResult oracle_result(const SectorSpectrum& spectrum, FormulaVariant variant,
                                 Ssr ssr) {
  const ConstrainedSimplexProblem problem =
      ConstrainedSimplexProblem::from_spectrum(spectrum, ssr);
  const OracleSolution sol = kl_min_oracle(problem);
  if (!sol.converged)
    throw ConvergenceError("oracle did not converge: " + sol.message);
  EntanglementResult r = base_result(spectrum, variant);
  r.q_star = sol.q;
  r.value = sol.value;
  r.from_oracle = true;
  const Quad pm = clamp(sector_m(spectrum));
  r.sector_m.t = std::max(pm.x, pm.y);
  r.sector_m.r = std::min(pm.x, pm.y) + pm.u + pm.v;
  r.sector_m.method = separable(pm) ? SectorMethod::kSeparable : SectorMethod::kGeneral;
  r.sector_m.value = sector_kl(pm, {sol.q[7], sol.q[8], sol.q[9], sol.q[10]});
  if (ssr == Ssr::kP) {
    const Quad pp = clamp(sector_mprime(spectrum));
    SectorDetail d;
    d.t = std::max(pp.x, pp.y);
    d.r = std::min(pp.x, pp.y) + pp.u + pp.v;
    d.method = separable(pp) ? SectorMethod::kSeparable : SectorMethod::kGeneral;
    d.value = sector_kl(pp, {sol.q[5], sol.q[6], sol.q[0], sol.q[15]});
    r.sector_mprime = d;
  }
  return r;
}

}  // namespace

EntanglementResult evaluate_entanglement(const TwoOrbitalState& rho,
                                         const EvaluationOptions& options) {
  TwoOrbitalState projected = ssr_project(rho, options.ssr);
  bool twirled = false;
  if (options.spin_twirl) {
    const SymmetryReport before = detect_symmetries(projected, options.tol);
    if (std::abs(before.singlet_triplet_coherence.imag()) > options.tol)
      throw InsufficientSymmetry("imaginary coherence b disqualifies the closed formulas");
    if (std::abs(before.singlet_triplet_coherence) > options.tol) {
      projected = twirl(projected, TwirlGenerator::kSpinSquared);
      twirled = true;
    }
  }
  const SymmetryReport report = detect_symmetries(projected, options.tol);
  const FormulaVariant variant = select_formula(report, options.ssr);
  const SectorSpectrum spectrum =
      sector_spectrum(projected, options.ssr == Ssr::kN ? nssr_basis() : pssr_basis(),
                      options.ssr);
  EntanglementResult result;
  try {
    switch (variant) {
      case FormulaVariant::kNssrSinglet:
        result = nssr_entanglement_singlet(spectrum, options.tol);
        break;
      case FormulaVariant::kNssrGeneral:
        result = nssr_entanglement_general(spectrum, options.tol);
        break;
      case FormulaVariant::kPssrSymmetric:
      case FormulaVariant::kPssrGeneral:
        result = pssr_entanglement(spectrum, options.tol);
        break;
    }
  } catch (const DegenerateSector&) {
    if (!options.oracle_fallback) throw;
    result = oracle_result(spectrum, variant, options.ssr);
  }
  result.spin_twirled = twirled;
  return result;
}

TwoOrbitalState closest_separable_state(const TwoOrbitalState& rho,
                                        const EvaluationOptions& options) {
  return closest_separable_state(evaluate_entanglement(rho, options));
}

Matrix16 product_of_marginals(const TwoOrbitalState& rho) {
  const Matrix4c a = marginal_a(rho);
  const Matrix4c b = marginal_b(rho);
  Matrix16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}

double mutual_information(const TwoOrbitalState& rho) {
  return relative_entropy(rho.matrix(), product_of_marginals(rho));
}

double classical_correlation(const TwoOrbitalState& rho, const EvaluationOptions& options) {
  const TwoOrbitalState sigma = closest_separable_state(rho, options);
  return relative_entropy(sigma.matrix(), product_of_marginals(rho));
}

SeniorityCost seniority_cost(std::span<const TwoOrbitalState> pair_states,
                             const EvaluationOptions& options) {
  SeniorityCost cost;
  for (std::size_t k = 0; k < pair_states.size(); ++k) {
    PairEntanglement pair;
    pair.index = k;
    try {
      const EntanglementResult r = evaluate_entanglement(pair_states[k], options);
      pair.value = r.value;
      pair.variant = r.variant;
      pair.from_oracle = r.from_oracle;
      cost.total += r.value;
    } catch (const Error& e) {
      pair.error = e.what();
      cost.partial = true;
    }
    cost.pairs.push_back(std::move(pair));
  }
  return cost;
}

void to_json(nlohmann::json& j, const SectorSpectrum& spectrum) {
  j = nlohmann::json{
      {"basis", std::string(to_string(spectrum.variant))},
      {"p", spectrum.weights},
      {"b", {{"re", spectrum.b.real()}, {"im", spectrum.b.imag()}}},
      {"b_prime", {{"re", spectrum.b_prime.real()}, {"im", spectrum.b_prime.imag()}}},
  };
}

namespace {

nlohmann::json sector_json(const SectorDetail& d) {
  nlohmann::json j{{"method", std::string(to_string(d.method))},
                   {"value_nats", d.value},
                   {"r", d.r},
                   {"t", d.t}};
  if (d.general_coefficients) {
    const auto& c = *d.general_coefficients;
    j["A"] = c[0];
    j["B"] = c[1];
    j["C"] = c[2];
    j["s"] = c[3];
  }
  return j;
}

}  // namespace

void to_json(nlohmann::json& j, const EntanglementResult& result) {
  j = nlohmann::json{
      {"value_nats", result.value},
      {"variant", std::string(to_string(result.variant))},
      {"method", result.from_oracle ? "oracle" : "closed-form"},
      {"p", result.p},
      {"q_star", result.q_star},
      {"r", result.sector_m.r},
      {"t", result.sector_m.t},
      {"r_prime", nullptr},
      {"t_prime", nullptr},
      {"spin_twirled", result.spin_twirled},
      {"sector_M", sector_json(result.sector_m)},
  };
  if (result.sector_mprime) {
    j["r_prime"] = result.sector_mprime->r;
    j["t_prime"] = result.sector_mprime->t;
    j["sector_Mprime"] = sector_json(*result.sector_mprime);
  }
}

}  // namespace orbent
