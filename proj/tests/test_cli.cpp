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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "orbent/cli/commands.hpp"
#include "orbent/errors.hpp"
#include "orbent/random.hpp"
#include "orbent/state_io.hpp"
#include "support.hpp"

using namespace orbent;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using nlohmann::json;

namespace {

constexpr double kLn2 = std::numbers::ln2;

struct Run {
  int code = 0;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "orbent");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch_dir() {
  const char* env = std::getenv("ORBENT_TEST_TMP");
  std::filesystem::path dir =
      env ? std::filesystem::path(env) : std::filesystem::temp_directory_path();
  dir /= "orbent_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_state(const std::string& name, const TwoOrbitalState& rho) {
  const std::string path = (scratch_dir() / name).string();
  write_state_file(path, rho);
  return path;
}

std::string write_text(const std::string& name, const std::string& text) {
  const std::string path = (scratch_dir() / name).string();
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  return lines;
}

TwoOrbitalState degenerate_state() {
  SectorSpectrum s;
  s.variant = BasisVariant::kNssr;
  const double rest = 0.1 / 12.0;
  s.weights.fill(rest);
  s.p(8) = 0.6;
  s.p(9) = 0.1;
  s.p(10) = 0.2;
  s.p(11) = 0.0;
  return state_from_spectrum(s);
}

}  // namespace

TEST_CASE("grid parsing") {
  const std::vector<double> g = cli::parse_grid("0.1:0.9:9");
  REQUIRE(g.size() == 9);
  CHECK(g.front() == 0.1);
  CHECK(g.back() == 0.9);
  CHECK_THAT(g[4], WithinAbs(0.5, 1e-15));
  CHECK(cli::parse_grid("2.5") == std::vector<double>{2.5});
  CHECK(cli::parse_grid("3:3:1") == std::vector<double>{3.0});
  CHECK_THROWS_AS(cli::parse_grid("1:2"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_grid("1:2:0"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_grid("1:2:2.5"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_grid("x"), InvalidArgument);
  CHECK_THROWS_AS(cli::parse_grid("1:2:1"), InvalidArgument);
}

TEST_CASE("number formatting") {
  CHECK(cli::format_number(0.1) == "0.1");
  CHECK(cli::format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(cli::format_number(2.0) == "2");
  CHECK(cli::format_number(1e-20) == "1e-20");
  CHECK(cli::format_number(-0.5) == "-0.5");
}

TEST_CASE("formula command") {
  const std::string singlet =
      write_state("singlet.json", TwoOrbitalState::from_pure(testing::singlet_vector()));
  Run r = run({"formula", "--input", singlet});
  REQUIRE(r.code == 0);
  json d = r.doc();
  CHECK_THAT(d["result"]["value_nats"].get<double>(), WithinAbs(kLn2, 1e-12));
  CHECK(d["result"]["variant"] == "NSSR-singlet");
  CHECK(d["version"] == "1.0.0");
  CHECK(d["config"]["ssr"] == "N");

  r = run({"--bits", "formula", "--input", singlet, "--ssr", "P"});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.doc()["result"]["value_bits"].get<double>(), WithinAbs(1.0, 1e-12));
  CHECK(r.doc()["result"]["units"] == "bits");

  const std::string product = write_state("product.json", TwoOrbitalState::maximally_mixed());
  r = run({"formula", "--input", product});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["result"]["value_nats"].get<double>() == 0.0);
}

TEST_CASE("formula command failures map to exit codes") {
  Rng rng(51);
  const std::string generic =
      write_state("generic.json", TwoOrbitalState::from_matrix(testing::random_density(rng)));
  Run r = run({"formula", "--input", generic});
  CHECK(r.code == 3);
  CHECK_THAT(r.err, ContainsSubstring("oracle-verify"));

  const std::string degenerate = write_state("degenerate.json", degenerate_state());
  CHECK(run({"formula", "--input", degenerate}).code == 4);
  r = run({"formula", "--input", degenerate, "--oracle-fallback"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["result"]["value_nats"].get<double>() > 0.0);

  CHECK(run({"formula", "--input", write_text("bad.json", "{\"dim\": 4}")}).code == 2);
  CHECK(run({"formula", "--input", write_text("broken.json", "{not json")}).code == 2);
  CHECK(run({"formula", "--input", (scratch_dir() / "missing.json").string()}).code == 2);
  json doc = state_to_json(TwoOrbitalState::maximally_mixed());
  doc["re"][0][0] = 1.0;
  CHECK(run({"formula", "--input", write_text("trace.json", doc.dump())}).code == 2);
  CHECK(run({"formula"}).code == 1);
  CHECK(run({"formula", "--input", generic, "--ssr", "Q"}).code == 1);
}

TEST_CASE("oracle-verify command") {
  Run r = run({"oracle-verify", "--random", "200", "--seed", "1"});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["pass"] == true);
  CHECK(d["variants"].size() == 3);
  for (const json& v : d["variants"]) CHECK(v["max_abs_dev_nats"].get<double>() <= 1e-6);
  CHECK(d["config"]["seed"] == 1);

  const std::string product = write_state("product.json", TwoOrbitalState::maximally_mixed());
  r = run({"oracle-verify", "--input", product});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["formula"]["value_nats"].get<double>() == 0.0);
  CHECK_THAT(r.doc()["oracle"]["value_nats"].get<double>(), WithinAbs(0.0, 1e-12));

  const std::string degenerate = write_state("degenerate.json", degenerate_state());
  r = run({"oracle-verify", "--input", degenerate});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["formula"]["status"] == "N/A");
  CHECK(r.doc()["oracle"]["value_nats"].get<double>() > 0.0);

  Vector16 psi = Vector16::Zero();
  psi(testing::ket(1, 2)) = std::sqrt(0.8);
  psi(testing::ket(2, 1)) = std::sqrt(0.2);
  const std::string coherent = write_state("coherent.json", TwoOrbitalState::from_pure(psi));
  r = run({"oracle-verify", "--input", coherent});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["oracle"]["method"] == "coherent-sector");
  CHECK_THAT(r.doc()["oracle"]["value_nats"].get<double>(),
             WithinAbs(-0.8 * std::log(0.8) - 0.2 * std::log(0.2), 1e-8));

  CHECK(run({"oracle-verify"}).code == 1);
  CHECK(run({"oracle-verify", "--random", "5", "--variant", "other"}).code == 1);
}

TEST_CASE("inspect command") {
  const std::string singlet =
      write_state("singlet.json", TwoOrbitalState::from_pure(testing::singlet_vector()));
  const Run r = run({"inspect", "--input", singlet});
  REQUIRE(r.code == 0);
  const json d = r.doc();
  CHECK(d["N"]["formula_variant"] == "NSSR-singlet");
  CHECK(d["ppt"]["is_ppt"] == false);
  CHECK_THAT(d["mutual_information"].get<double>(), WithinAbs(2.0 * kLn2, 1e-12));
}

TEST_CASE("table commands") {
  Run r = run({"lmin", "--eta-grid", "0.1:0.9:9"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find('\r') == std::string::npos);
  CHECK(r.out.rfind("# orbent 1.0.0", 0) == 0);
  std::vector<std::string> lines = data_lines(r.out);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "eta,l_min,leading_order,l_cap");
  CHECK_THAT(r.out, ContainsSubstring("# units "));
  CHECK(lines[5].rfind("0.5,2,1.8006", 0) == 0);
  CHECK(run({"lmin", "--eta-grid", "0.1", "--l-cap", "3"}).code == 1);

  r = run({"free-fermion-scan", "--eta-grid", "0.5", "--l-max", "8"});
  REQUIRE(r.code == 0);
  lines = data_lines(r.out);
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "eta,l,E_nats,r,t");
  CHECK(lines[2].rfind("0.5,2,0,", 0) == 0);

  r = run({"--bits", "--format", "json", "free-fermion-scan", "--eta-grid", "0.5", "--l-max", "1"});
  REQUIRE(r.code == 0);
  const json rows = r.doc()["rows"];
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].contains("E_bits"));

  r = run({"ehm-scan", "--L", "6", "--U", "4", "--V", "0:1:2", "--pivot", "3"});
  REQUIRE(r.code == 0);
  lines = data_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].rfind("U,V,E_strong_nats,E_weak_nats,delta", 0) == 0);
  CHECK(run({"ehm-scan", "--L", "6", "--boundary", "twisted"}).code == 1);
  CHECK(run({"ehm-scan", "--L", "40"}).code == 1);

  const std::string out_path = (scratch_dir() / "lmin.csv").string();
  r = run({"--output", out_path, "lmin", "--eta-grid", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(data_lines(buf.str()).size() == 2);
}

TEST_CASE("dimer and seniority commands") {
  Run r = run({"dimer", "--U", "0", "--V", "0"});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.doc()["entanglement_N"].get<double>(), WithinAbs(0.5 * kLn2, 1e-10));
  r = run({"--bits", "dimer", "--U", "0"});
  CHECK_THAT(r.doc()["entanglement_N"].get<double>(), WithinAbs(0.5, 1e-10));
  CHECK(r.doc()["units"] == "bits");
  CHECK(run({"dimer", "--t-hop", "0"}).code == 1);

  r = run({"seniority", "--L", "4", "--U", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.doc()["pairs"].size() == 6);
  CHECK(r.doc()["total"].get<double>() >= 0.0);
  CHECK(r.doc()["partial"] == false);

  json list = json::array();
  Vector16 pair = Vector16::Zero();
  pair(testing::ket(0, 3)) = 0.6;
  pair(testing::ket(3, 0)) = 0.8;
  list.push_back(state_to_json(TwoOrbitalState::from_pure(pair)));
  list.push_back(state_to_json(TwoOrbitalState::maximally_mixed()));
  r = run({"seniority", "--input", write_text("pairs.json", list.dump())});
  REQUIRE(r.code == 0);
  CHECK_THAT(r.doc()["total"].get<double>(), WithinAbs(0.0, 1e-14));
  CHECK(run({"seniority"}).code == 1);
}

TEST_CASE("identical runs give identical bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"oracle-verify", "--random", "50", "--seed", "7"},
        std::vector<std::string>{"free-fermion-scan", "--eta-grid", "0.1:0.9:5", "--l-max", "6"},
        std::vector<std::string>{"ehm-scan", "--L", "6", "--U", "2:4:2", "--V", "0:2:3"}}) {
    const Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
  // The seed is echoed and changes the draws.
  const Run s1 = run({"oracle-verify", "--random", "5", "--seed", "1", "--variant", "general"});
  const Run s2 = run({"oracle-verify", "--random", "5", "--seed", "2", "--variant", "general"});
  CHECK(s1.doc()["config"]["seed"] == 1);
  CHECK(s1.out != s2.out);
}

TEST_CASE("global options") {
  Run r = run({"--version"});
  CHECK(r.code == 0);
  CHECK_THAT(r.out, ContainsSubstring("1.0.0"));
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--tol", "-1", "dimer"}).code == 1);
  CHECK(run({"--format", "xml", "dimer"}).code == 1);
}
