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

#include <cstdint>
#include <string>
#include <vector>

#include "cohgen/capacity.hpp"
#include "cohgen/matrix_json.hpp"

namespace cohgen {

enum class VerifyLevel { Fast, Full };

std::string_view to_string(VerifyLevel level);
VerifyLevel parse_verify_level(const std::string& text);

struct CheckResult {
  std::string name;
  double tolerance;
  double residual;  // worst observed violation; passes iff residual <= tolerance
  long samples;
  bool passed;
};

struct VerifyReport {
  VerifyLevel level;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  Json to_json() const;
};

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Fast;
  std::uint64_t seed = 20240917;
  /// Implementation of M = i[rho, log2 Delta(rho)] under test.
  CommutatorFn commutator = commutator_M;
};

/// Runs the identity and property checks: dephasing/log identity, the two
/// forms of the surprisal variance, entropy constancy under unitary flow,
/// finite differences against the analytic derivative, Holder saturation,
/// the capacity bound and its attainment for d = 2..6, and qubit
/// cross-method agreement. Full level adds the simplex grid oracle and
/// larger sample counts.
VerifyReport run_verification(const VerifyOptions& options);

/// Allowed shortfall of the best point of a simplex grid with spacing
/// 1/resolution below max f: rounding the free coordinates of the maximizer
/// to the grid moves it by at most sqrt(d-1)/(2 resolution), so the drop is
/// bounded by kappa (d-1) / (8 resolution^2) with kappa the curvature of f
/// at the maximizer. Returns twice that bound.
double simplex_grid_tolerance(std::size_t d, int resolution);

/// Least-squares slope of log(residual) against log(step).
double loglog_slope(const std::vector<double>& steps, const std::vector<double>& residuals);

}  // namespace cohgen
