// Copyright 2026 The cohgen Authors
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
#include <string_view>

namespace cohgen {

enum class ErrorCode {
  NotSquare,
  NotFinite,
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NotNormalized,
  NotProbability,
  DimensionMismatch,
  ConvergenceFailure,
  NoConvergence,
  ZeroCommutator,
  InvalidGamma,
  InvalidArgument,
  SingularState,
  ResolutionTooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Library error. `magnitude()` carries the worst offending value for
/// validation failures (e.g. the largest Hermiticity residual), NaN otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double magnitude);
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorCode code_;
  double magnitude_;
};

}  // namespace cohgen
