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

#include "orbent/state_io.hpp"

#include <fstream>

namespace orbent {

namespace {

Eigen::Matrix<double, 16, 16> read_block(const nlohmann::json& doc, const char* key) {
  const auto& rows = doc.at(key);
  if (!rows.is_array() || rows.size() != 16)
    throw SchemaError(std::string("'") + key + "' must be a 16x16 array");
  Eigen::Matrix<double, 16, 16> out;
  for (int i = 0; i < 16; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != 16)
      throw SchemaError(std::string("'") + key + "' must be a 16x16 array");
    for (int j = 0; j < 16; ++j) {
      if (!row[j].is_number())
        throw SchemaError(std::string("'") + key + "' entries must be numbers");
      out(i, j) = row[j].get<double>();
    }
  }
  return out;
}

}  // namespace

nlohmann::json state_to_json(const TwoOrbitalState& rho) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < 16; ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int j = 0; j < 16; ++j) {
      re_row.push_back(rho(i, j).real());
      im_row.push_back(rho(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return {{"dim", 16}, {"basis", kOccupationBasisTag}, {"re", re}, {"im", im}};
}

TwoOrbitalState state_from_json(const nlohmann::json& doc, const StateTolerances& tol) {
  if (!doc.is_object()) throw SchemaError("density matrix document must be an object");
  if (!doc.contains("dim") || doc.at("dim") != 16)
    throw SchemaError("'dim' must be 16");
  if (!doc.contains("basis") || doc.at("basis") != kOccupationBasisTag)
    throw SchemaError(std::string("'basis' must be \"") + kOccupationBasisTag + "\"");
  if (!doc.contains("re")) throw SchemaError("missing 're'");
  Matrix16 rho = read_block(doc, "re").cast<Complex>();
  if (doc.contains("im")) rho += Complex(0.0, 1.0) * read_block(doc, "im").cast<Complex>();
  return TwoOrbitalState::from_matrix(rho, tol);
}

TwoOrbitalState read_state_file(const std::string& path, const StateTolerances& tol) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
  return state_from_json(doc, tol);
}

void write_state_file(const std::string& path, const TwoOrbitalState& rho) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << state_to_json(rho).dump(2) << '\n';
}

}  // namespace orbent
