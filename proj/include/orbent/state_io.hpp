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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "orbent/fock.hpp"

namespace orbent {

/// Basis tag written into and required from density-matrix documents.
inline constexpr const char* kOccupationBasisTag = "occupation-A↑A↓B↑B↓";

/// {"dim": 16, "basis": ..., "re": [[...]], "im": [[...]]}. "im" may be
/// omitted for real matrices.
nlohmann::json state_to_json(const TwoOrbitalState& rho);
TwoOrbitalState state_from_json(const nlohmann::json& doc,
                                const StateTolerances& tol = {});

TwoOrbitalState read_state_file(const std::string& path,
                                const StateTolerances& tol = {});
void write_state_file(const std::string& path, const TwoOrbitalState& rho);

}  // namespace orbent
