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

#include <stdexcept>
#include <string>

namespace orbent {

/// Stable error categories. The CLI maps them to process exit codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kInvalidState = 2,
  kSchema = 2,
  kInsufficientSymmetry = 3,
  kDegenerateSector = 4,
  kOracleDeviation = 5,
  kNotDisentangled = 6,
  kNonConvergence = 7,
  kDegenerateGroundState = 8,
  kResourceLimit = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

/// Matrix fails the Hermiticity, trace or positivity checks of a state.
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& what)
      : Error(ErrorCode::kInvalidState, what) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what)
      : Error(ErrorCode::kSchema, what) {}
};

/// The state has none of the symmetry combinations a closed formula needs.
class InsufficientSymmetry : public Error {
 public:
  explicit InsufficientSymmetry(const std::string& what)
      : Error(ErrorCode::kInsufficientSymmetry, what) {}
};

/// A rank-deficient entangling sector; closed formulas refuse these.
class DegenerateSector : public Error {
 public:
  explicit DegenerateSector(const std::string& what)
      : Error(ErrorCode::kDegenerateSector, what) {}
};

class NotDisentangledWithinCap : public Error {
 public:
  explicit NotDisentangledWithinCap(const std::string& what)
      : Error(ErrorCode::kNotDisentangled, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorCode::kNonConvergence, what) {}
};

class DegenerateGroundState : public Error {
 public:
  explicit DegenerateGroundState(const std::string& what)
      : Error(ErrorCode::kDegenerateGroundState, what) {}
};

class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what)
      : Error(ErrorCode::kResourceLimit, what) {}
};

}  // namespace orbent
