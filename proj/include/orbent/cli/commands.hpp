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
#include <vector>

namespace orbent::cli {

/// Parses "a:b:n" (n evenly spaced points, both ends included) or a single
/// number.
std::vector<double> parse_grid(const std::string& text);

/// 12 significant digits, '.' decimal point regardless of locale.
std::string format_number(double x);

/// Runs the command line; returns the process exit code. Results go to `out`
/// (or the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbent::cli
