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

#include "orbent/cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "orbent/entanglement.hpp"
#include "orbent/free_fermion.hpp"
#include "orbent/lattice_ed.hpp"
#include "orbent/oracle.hpp"
#include "orbent/random.hpp"
#include "orbent/ssr.hpp"
#include "orbent/state_io.hpp"
#include "orbent/version.hpp"

namespace orbent::cli {

using nlohmann::json;

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse number '" + s + "' in grid '" + text + "'");
    }
    if (used != s.size() || !std::isfinite(x))
      throw InvalidArgument("cannot parse number '" + s + "' in grid '" + text + "'");
    return x;
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3) throw InvalidArgument("grid must be 'a:b:n' or a single number");
  const double a = number(parts[0]), b = number(parts[1]);
  const double n_real = number(parts[2]);
  const int n = static_cast<int>(n_real);
  if (n < 1 || n != n_real) throw InvalidArgument("grid point count must be a positive integer");
  if (n == 1) {
    if (a != b) throw InvalidArgument("a one-point grid needs a == b");
    return {a};
  }
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out[k] = a + (b - a) * k / (n - 1);
  return out;
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

constexpr double kOracleAgreement = 1e-6;

struct Common {
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  bool bits = false;
  std::string output;
  std::string format;
};

double to_units(double nats, bool bits) { return bits ? nats / std::numbers::ln2 : nats; }
const char* unit_name(bool bits) { return bits ? "bits" : "nats"; }

json common_config(const Common& c, double tol) {
  return {{"seed", c.seed}, {"tol", tol}, {"units", unit_name(c.bits)}};
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidArgument("cannot open output file " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void emit_json(const Common& c, std::ostream& fallback, const std::string& command,
               const json& config, json body) {
  json doc{{"version", kVersion}, {"command", command}, {"config", config}};
  for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
  Sink sink(c.output, fallback);
  sink.stream() << doc.dump(2) << '\n';
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string units;
};

void emit_table(const Common& c, std::ostream& fallback, const std::string& command,
                const json& config, const Table& table) {
  Sink sink(c.output, fallback);
  std::ostream& os = sink.stream();
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json r;
      for (std::size_t k = 0; k < row.size(); ++k) r[table.columns[k]] = row[k];
      rows.push_back(r);
    }
    json doc{{"version", kVersion}, {"command", command}, {"config", config},
             {"units", table.units}, {"rows", rows}};
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# orbent " << kVersion << " " << command << '\n';
  os << "# config " << config.dump() << '\n';
  os << "# units " << table.units << '\n';
  for (std::size_t k = 0; k < table.columns.size(); ++k)
    os << (k ? "," : "") << table.columns[k];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << format_number(row[k]);
    os << '\n';
  }
}

json entanglement_json(const EntanglementResult& r, bool bits) {
  json j = r;
  j["units"] = unit_name(bits);
  if (bits) j["value_bits"] = to_units(r.value, true);
  return j;
}

// formula -------------------------------------------------------------------

struct FormulaArgs {
  std::string input;
  std::string ssr = "N";
  bool spin_twirl = false;
  bool oracle_fallback = false;
};

int cmd_formula(const Common& c, const FormulaArgs& a, std::ostream& out, std::ostream& err) {
  EvaluationOptions options;
  options.ssr = ssr_from_string(a.ssr);
  options.tol = c.tol.value_or(kDefaultSymmetryTolerance);
  options.spin_twirl = a.spin_twirl;
  options.oracle_fallback = a.oracle_fallback;
  const TwoOrbitalState rho = read_state_file(a.input);
  json config = common_config(c, options.tol);
  config["input"] = a.input;
  config["ssr"] = a.ssr;
  config["spin_twirl"] = a.spin_twirl;
  config["oracle_fallback"] = a.oracle_fallback;
  try {
    const EntanglementResult r = evaluate_entanglement(rho, options);
    emit_json(c, out, "formula", config, {{"result", entanglement_json(r, c.bits)}});
  } catch (const InsufficientSymmetry& e) {
    err << "error: " << e.what() << "\nhint: run 'orbent oracle-verify --input " << a.input
        << "' for a numerical value\n";
    return static_cast<int>(e.code());
  } catch (const DegenerateSector& e) {
    err << "error: " << e.what() << "\nhint: pass --oracle-fallback\n";
    return static_cast<int>(e.code());
  }
  return 0;
}

// oracle-verify -------------------------------------------------------------

struct OracleArgs {
  std::string input;
  std::string ssr = "N";
  int random = 0;
  std::string variant = "all";
};

struct Agreement {
  std::string variant;
  int draws = 0;
  int compared = 0;
  int not_converged = 0;
  double max_dev = 0.0;
  double sum_dev = 0.0;
};

Agreement agreement_run(const std::string& variant, int n, Rng& rng) {
  Agreement a;
  a.variant = variant;
  for (int k = 0; k < n; ++k) {
    SectorSpectrum s;
    Ssr ssr = Ssr::kN;
    if (variant == "singlet") {
      s = random_singlet_spectrum(rng);
    } else if (variant == "general") {
      s = random_general_spectrum(rng);
    } else {
      s = random_pssr_spectrum(rng, false);
      ssr = Ssr::kP;
    }
    ++a.draws;
    double formula = 0.0;
    try {
      formula = variant == "singlet"   ? nssr_entanglement_singlet(s).value
                : variant == "general" ? nssr_entanglement_general(s).value
                                       : pssr_entanglement(s).value;
    } catch (const DegenerateSector&) {
      continue;
    }
    const OracleSolution o = kl_min_oracle(ConstrainedSimplexProblem::from_spectrum(s, ssr));
    if (!o.converged) ++a.not_converged;
    const double dev = std::abs(formula - o.value);
    ++a.compared;
    a.max_dev = std::max(a.max_dev, dev);
    a.sum_dev += dev;
  }
  return a;
}

int cmd_oracle(const Common& c, const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const double tol = c.tol.value_or(kDefaultSymmetryTolerance);
  json config = common_config(c, tol);
  if (!a.input.empty() && a.random > 0)
    throw InvalidArgument("use either --input or --random, not both");
  if (a.input.empty() && a.random <= 0) throw InvalidArgument("need --input or --random N");
  if (a.random > 0) {
    config["random"] = a.random;
    config["variant"] = a.variant;
    std::vector<std::string> variants;
    if (a.variant == "all")
      variants = {"singlet", "general", "pssr"};
    else if (a.variant == "singlet" || a.variant == "general" || a.variant == "pssr")
      variants = {a.variant};
    else
      throw InvalidArgument("variant must be singlet, general, pssr or all");
    json reports = json::array();
    double worst = 0.0;
    int not_converged = 0;
    for (const std::string& v : variants) {
      Rng rng(c.seed);
      const Agreement g = agreement_run(v, a.random, rng);
      worst = std::max(worst, g.max_dev);
      not_converged += g.not_converged;
      reports.push_back({{"variant", v},
                         {"draws", g.draws},
                         {"compared", g.compared},
                         {"oracle_not_converged", g.not_converged},
                         {"max_abs_dev_nats", g.max_dev},
                         {"mean_abs_dev_nats", g.compared ? g.sum_dev / g.compared : 0.0}});
    }
    const bool pass = worst <= kOracleAgreement && not_converged == 0;
    emit_json(c, out, "oracle-verify", config,
              {{"threshold_nats", kOracleAgreement}, {"pass", pass}, {"variants", reports}});
    if (not_converged > 0) {
      err << "error: oracle did not converge on " << not_converged << " draws\n";
      return static_cast<int>(ErrorCode::kNonConvergence);
    }
    if (!pass) {
      err << "error: formula and oracle deviate by " << worst << " nats\n";
      return static_cast<int>(ErrorCode::kOracleDeviation);
    }
    return 0;
  }

  config["input"] = a.input;
  config["ssr"] = a.ssr;
  const Ssr ssr = ssr_from_string(a.ssr);
  const TwoOrbitalState rho = read_state_file(a.input);
  const TwoOrbitalState projected = ssr_project(rho, ssr);
  json body;
  std::optional<double> formula;
  try {
    EvaluationOptions options;
    options.ssr = ssr;
    options.tol = tol;
    const EntanglementResult r = evaluate_entanglement(rho, options);
    formula = r.value;
    body["formula"] = {{"value_nats", r.value}, {"variant", std::string(to_string(r.variant))}};
  } catch (const Error& e) {
    body["formula"] = {{"value_nats", nullptr}, {"status", "N/A"}, {"reason", e.what()}};
  }
  const SymmetryReport report = detect_symmetries(projected, tol);
  const bool coherent = std::abs(report.singlet_triplet_coherence) > tol ||
                        (ssr == Ssr::kP && std::abs(report.pair_coherence) > tol);
  double oracle_value = 0.0;
  bool converged = false;
  double stationarity = 0.0;
  std::string method;
  if (coherent) {
    const CoherentEntanglement co = coherent_entanglement_oracle(projected, ssr);
    oracle_value = co.value;
    converged = co.converged;
    stationarity = co.stationarity_residual;
    method = "coherent-sector";
  } else {
    if (!report.spin_z.holds || (ssr == Ssr::kP && !report.particle_number.holds))
      throw InsufficientSymmetry("the oracle needs Sz (and, for P, N) symmetry");
    const SectorSpectrum s =
        sector_spectrum(projected, ssr == Ssr::kN ? nssr_basis() : pssr_basis(), ssr);
    const OracleSolution o = kl_min_oracle(ConstrainedSimplexProblem::from_spectrum(s, ssr));
    oracle_value = o.value;
    converged = o.converged;
    stationarity = o.stationarity_residual;
    method = "kl-simplex";
  }
  body["oracle"] = {{"value_nats", oracle_value},
                    {"method", method},
                    {"converged", converged},
                    {"stationarity_residual", stationarity}};
  body["units"] = "nats";
  if (formula) body["abs_dev_nats"] = std::abs(*formula - oracle_value);
  emit_json(c, out, "oracle-verify", config, body);
  if (!converged) return static_cast<int>(ErrorCode::kNonConvergence);
  if (formula && std::abs(*formula - oracle_value) > kOracleAgreement) {
    err << "error: formula and oracle deviate\n";
    return static_cast<int>(ErrorCode::kOracleDeviation);
  }
  return 0;
}

// inspect -------------------------------------------------------------------

json rule_summary(const TwoOrbitalState& rho, Ssr ssr, double tol) {
  const TwoOrbitalState projected = ssr_project(rho, ssr);
  const SymmetryReport report = detect_symmetries(projected, tol);
  json j{{"symmetries", report},
         {"spectrum", sector_spectrum(projected, ssr == Ssr::kN ? nssr_basis() : pssr_basis(),
                                      ssr)}};
  try {
    j["formula_variant"] = std::string(to_string(select_formula(report, ssr)));
  } catch (const InsufficientSymmetry& e) {
    j["formula_variant"] = nullptr;
    j["refusal"] = e.what();
  }
  return j;
}

int cmd_inspect(const Common& c, const std::string& input, std::ostream& out) {
  const double tol = c.tol.value_or(kDefaultSymmetryTolerance);
  json config = common_config(c, tol);
  config["input"] = input;
  const TwoOrbitalState rho = read_state_file(input);
  const PptResult ppt = ppt_oracle(rho);
  emit_json(c, out, "inspect", config,
            {{"symmetries", detect_symmetries(rho, tol)},
             {"N", rule_summary(rho, Ssr::kN, tol)},
             {"P", rule_summary(rho, Ssr::kP, tol)},
             {"mutual_information", to_units(mutual_information(rho), c.bits)},
             {"units", unit_name(c.bits)},
             {"ppt", {{"is_ppt", ppt.is_ppt}, {"min_eigenvalue", ppt.min_eigenvalue}}}});
  return 0;
}

// free fermions -------------------------------------------------------------

int cmd_free_fermion(const Common& c, const std::string& eta_grid, int l_max, std::ostream& out) {
  const std::vector<double> etas = parse_grid(eta_grid);
  json config = common_config(c, kDefaultSymmetryTolerance);
  config["eta_grid"] = eta_grid;
  config["l_max"] = l_max;
  Table t;
  const std::string u = unit_name(c.bits);
  t.columns = {"eta", "l", "E_" + u, "r", "t"};
  t.units = "E in " + u + ", l in lattice constants, eta per spin";
  for (double eta : etas)
    for (const DistancePoint& p : entanglement_vs_distance(FillingFraction(eta), l_max))
      t.rows.push_back({eta, static_cast<double>(p.l), to_units(p.entanglement, c.bits), p.r, p.t});
  emit_table(c, out, "free-fermion-scan", config, t);
  return 0;
}

int cmd_lmin(const Common& c, const std::string& eta_grid, int l_cap, std::ostream& out) {
  const std::vector<double> etas = parse_grid(eta_grid);
  json config = common_config(c, kDefaultSymmetryTolerance);
  config["eta_grid"] = eta_grid;
  config["l_cap"] = l_cap > 0 ? json(l_cap) : json("4*ceil(leading_order)");
  Table t;
  t.columns = {"eta", "l_min", "leading_order", "l_cap"};
  t.units = "l_min, leading_order and l_cap in lattice constants, eta per spin";
  for (double eta : etas) {
    const FillingFraction f(eta);
    const DisentanglingDistance d =
        l_cap > 0 ? disentangling_distance(f, l_cap) : disentangling_distance(f);
    t.rows.push_back({eta, static_cast<double>(d.l_min), lmin_leading_order(f),
                      static_cast<double>(d.l_cap)});
  }
  emit_table(c, out, "lmin", config, t);
  return 0;
}

// extended Hubbard ----------------------------------------------------------

struct ScanArgs {
  int length = 8;
  std::string u = "6";
  std::string v = "2.5:3.5:21";
  int pivot = -1;
  double t_hop = 1.0;
  std::string boundary = "open";
};

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::kOpen;
  if (s == "periodic") return Boundary::kPeriodic;
  throw InvalidArgument("boundary must be open or periodic");
}

int cmd_ehm(const Common& c, const ScanArgs& a, std::ostream& out) {
  BondScanConfig cfg;
  cfg.length = a.length;
  cfg.pivot = a.pivot >= 0 ? a.pivot : a.length / 2;
  cfg.u_values = parse_grid(a.u);
  cfg.v_values = parse_grid(a.v);
  cfg.t_hop = a.t_hop;
  cfg.boundary = boundary_from_string(a.boundary);
  cfg.tol = c.tol.value_or(1e-8);
  cfg.threads = configured_threads();
  json config = common_config(c, cfg.tol);
  config["L"] = cfg.length;
  config["pivot"] = cfg.pivot;
  config["U"] = a.u;
  config["V"] = a.v;
  config["t_hop"] = cfg.t_hop;
  config["boundary"] = a.boundary;
  config["threads"] = cfg.threads;
  config["strong_bond"] = "left site even";
  const std::vector<BondScanPoint> points = bond_scan(cfg);
  Table t;
  const std::string u = unit_name(c.bits);
  t.columns = {"U", "V", "E_strong_" + u, "E_weak_" + u, "delta", "E_left_" + u, "E_right_" + u,
               "ground_energy"};
  t.units = "U, V and ground_energy share the energy unit of t_hop; E and delta in " + u;
  for (const BondScanPoint& p : points)
    t.rows.push_back({p.u, p.v, to_units(p.e_strong, c.bits), to_units(p.e_weak, c.bits),
                      to_units(p.delta, c.bits), to_units(p.e_left, c.bits),
                      to_units(p.e_right, c.bits), p.energy});
  emit_table(c, out, "ehm-scan", config, t);
  return 0;
}

int cmd_dimer(const Common& c, double u, double v, double t_hop, std::ostream& out) {
  json config = common_config(c, 1e-8);
  config["U"] = u;
  config["V"] = v;
  config["t_hop"] = t_hop;
  const DimerAnalytics d = dimer_analytics(u, v, t_hop);
  emit_json(c, out, "dimer", config,
            {{"units", unit_name(c.bits)},
             {"energy_exact", d.energy_exact},
             {"energy_ed", d.energy_ed},
             {"covalent_weight", d.covalent_weight},
             {"entanglement_N_exact", to_units(d.entanglement_n_exact, c.bits)},
             {"entanglement_N", to_units(d.entanglement_n, c.bits)},
             {"entanglement_P", to_units(d.entanglement_p, c.bits)},
             {"mutual_information", to_units(d.mutual_information, c.bits)}});
  return 0;
}

// seniority -----------------------------------------------------------------

struct SeniorityArgs {
  std::string input;
  int length = 0;
  double u = 4.0;
  double v = 0.0;
  std::string orbitals = "natural";
};

int cmd_seniority(const Common& c, const SeniorityArgs& a, std::ostream& out) {
  EvaluationOptions options;
  options.ssr = Ssr::kN;
  options.oracle_fallback = true;
  std::vector<TwoOrbitalState> pairs;
  std::vector<std::pair<int, int>> labels;
  json config;
  if (!a.input.empty()) {
    if (a.length > 0) throw InvalidArgument("use either --input or --L, not both");
    options.tol = c.tol.value_or(kDefaultSymmetryTolerance);
    config = common_config(c, options.tol);
    config["input"] = a.input;
    std::ifstream in(a.input);
    if (!in) throw InvalidArgument("cannot open " + a.input);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    const json& list = doc.is_object() && doc.contains("pairs") ? doc["pairs"] : doc;
    if (!list.is_array()) throw SchemaError("expected an array of density matrices");
    for (const json& item : list) pairs.push_back(state_from_json(item));
    for (std::size_t k = 0; k < pairs.size(); ++k) labels.emplace_back(static_cast<int>(k), -1);
  } else {
    if (a.length < 2) throw InvalidArgument("need --input or --L");
    options.tol = c.tol.value_or(1e-8);
    config = common_config(c, options.tol);
    config["L"] = a.length;
    config["U"] = a.u;
    config["V"] = a.v;
    config["orbitals"] = a.orbitals;
    const ChainGroundState gs = solve_chain(ChainSpec::half_filled(a.length, a.u, a.v));
    Eigen::VectorXd psi = gs.state.amplitudes;
    if (a.orbitals == "natural")
      psi = rotate_orbitals(gs.basis, psi, natural_orbitals(gs.basis, psi).orbitals);
    else if (a.orbitals != "site")
      throw InvalidArgument("orbitals must be natural or site");
    for (int i = 0; i < a.length; ++i)
      for (int j = i + 1; j < a.length; ++j) {
        pairs.push_back(two_orbital_rdm(gs.basis, psi, i, j));
        labels.emplace_back(i, j);
      }
  }
  const SeniorityCost cost = seniority_cost(pairs, options);
  json rows = json::array();
  for (const PairEntanglement& p : cost.pairs) {
    json r;
    if (labels[p.index].second < 0) {
      r["index"] = p.index;
    } else {
      r["i"] = labels[p.index].first;
      r["j"] = labels[p.index].second;
    }
    r["value"] = p.value ? json(to_units(*p.value, c.bits)) : json(nullptr);
    if (p.variant) r["variant"] = std::string(to_string(*p.variant));
    r["method"] = p.from_oracle ? "oracle" : "closed-form";
    if (!p.error.empty()) r["error"] = p.error;
    rows.push_back(r);
  }
  emit_json(c, out, "seniority", config,
            {{"units", unit_name(c.bits)},
             {"total", to_units(cost.total, c.bits)},
             {"partial", cost.partial},
             {"pairs", rows}});
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superselection-rule orbital entanglement toolkit", "orbent"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  double tol = 0.0;
  CLI::Option* tol_opt = app.add_option("--tol", tol, "Symmetry-detection tolerance")
                             ->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Seed for random draws")->capture_default_str();
  app.add_flag("--bits", common.bits, "Report entanglement in bits instead of nats");
  app.add_option("-o,--output", common.output, "Write results to a file");
  app.add_option("--format", common.format, "Table format for scans")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");

  FormulaArgs formula;
  CLI::App* f = app.add_subcommand("formula", "Closed-formula entanglement of a density matrix");
  f->add_option("--input", formula.input, "Density matrix JSON")->required();
  f->add_option("--ssr", formula.ssr, "Superselection rule")->check(CLI::IsMember({"N", "P"}));
  f->add_flag("--spin-twirl", formula.spin_twirl, "Remove a real singlet-triplet coherence");
  f->add_flag("--oracle-fallback", formula.oracle_fallback, "Use the oracle for degenerate sectors");

  OracleArgs oracle;
  CLI::App* o = app.add_subcommand("oracle-verify", "Compare closed formulas with the oracle");
  o->add_option("--input", oracle.input, "Density matrix JSON");
  o->add_option("--ssr", oracle.ssr, "Superselection rule")->check(CLI::IsMember({"N", "P"}));
  o->add_option("--random,--n", oracle.random, "Number of random spectra per variant");
  o->add_option("--variant", oracle.variant, "singlet, general, pssr or all");

  std::string inspect_input;
  CLI::App* in = app.add_subcommand("inspect", "Symmetries, spectra and admissible formulas");
  in->add_option("--input", inspect_input, "Density matrix JSON")->required();

  std::string eta_grid = "0.1:0.9:9";
  int l_max = 20;
  CLI::App* ff = app.add_subcommand("free-fermion-scan", "Entanglement versus distance");
  ff->add_option("--eta-grid", eta_grid, "Per-spin filling grid a:b:n")->capture_default_str();
  ff->add_option("--l-max", l_max, "Largest distance")->check(CLI::Range(1, 100000))
      ->capture_default_str();

  std::string lmin_grid = "0.1:0.9:9";
  int l_cap = 0;
  CLI::App* lm = app.add_subcommand("lmin", "Disentangling distance");
  lm->add_option("--eta-grid", lmin_grid, "Per-spin filling grid a:b:n")->capture_default_str();
  lm->add_option("--l-cap", l_cap, "Largest distance examined (default 4*ceil(leading))");

  ScanArgs scan;
  CLI::App* eh = app.add_subcommand("ehm-scan", "Bond entanglement of extended Hubbard chains");
  eh->add_option("--L", scan.length, "Chain length")->capture_default_str();
  eh->add_option("--U", scan.u, "On-site repulsion grid")->capture_default_str();
  eh->add_option("--V", scan.v, "Nearest-neighbor repulsion grid")->capture_default_str();
  eh->add_option("--pivot", scan.pivot, "Shared site (default L/2)");
  eh->add_option("--t-hop", scan.t_hop, "Hopping amplitude")->capture_default_str();
  eh->add_option("--boundary", scan.boundary, "open or periodic")->capture_default_str();

  double dimer_u = 0.0, dimer_v = 0.0, dimer_t = 1.0;
  CLI::App* dm = app.add_subcommand("dimer", "Two-site extended Hubbard analytics");
  dm->add_option("--U", dimer_u, "On-site repulsion")->capture_default_str();
  dm->add_option("--V", dimer_v, "Nearest-neighbor repulsion")->capture_default_str();
  dm->add_option("--t-hop", dimer_t, "Hopping amplitude")->capture_default_str();

  SeniorityArgs sen;
  CLI::App* sn = app.add_subcommand("seniority", "Sum of pair entanglements");
  sn->add_option("--input", sen.input, "JSON array of pair density matrices");
  sn->add_option("--L", sen.length, "Half-filled Hubbard chain length");
  sn->add_option("--U", sen.u, "On-site repulsion")->capture_default_str();
  sn->add_option("--V", sen.v, "Nearest-neighbor repulsion")->capture_default_str();
  sn->add_option("--orbitals", sen.orbitals, "natural or site")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorCode::kInvalidArgument);
  }
  if (*tol_opt) common.tol = tol;

  try {
    if (*f) return cmd_formula(common, formula, out, err);
    if (*o) return cmd_oracle(common, oracle, out, err);
    if (*in) return cmd_inspect(common, inspect_input, out);
    if (*ff) return cmd_free_fermion(common, eta_grid, l_max, out);
    if (*lm) return cmd_lmin(common, lmin_grid, l_cap, out);
    if (*eh) return cmd_ehm(common, scan, out);
    if (*dm) return cmd_dimer(common, dimer_u, dimer_v, dimer_t, out);
    if (*sn) return cmd_seniority(common, sen, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ErrorCode::kInvalidArgument);
  }
  return static_cast<int>(ErrorCode::kInvalidArgument);
}

}  // namespace orbent::cli
