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

#include "cohgen/error.hpp"

#include <limits>

namespace cohgen {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotUnitTrace: return "NotUnitTrace";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotProbability: return "NotProbability";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ZeroCommutator: return "ZeroCommutator";
    case ErrorCode::InvalidGamma: return "InvalidGamma";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SingularState: return "SingularState";
    case ErrorCode::ResolutionTooLarge: return "ResolutionTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, double magnitude)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      magnitude_(magnitude) {}

Error::Error(ErrorCode code, const std::string& what)
    : Error(code, what, std::numeric_limits<double>::quiet_NaN()) {}

}  // namespace cohgen
