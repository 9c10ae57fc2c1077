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

#include <cstddef>
#include <ostream>
#include <string>

#include "cohgen/capacity.hpp"
#include "cohgen/matrix_json.hpp"
#include "cohgen/verify.hpp"

namespace cohgen::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kInputError = 2,
  kNoConvergence = 3,
};

inline constexpr const char* kVersion = "0.1.0";

/// `start:stop:steps`, steps samples from start to stop inclusive.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;
};

GridSpec parse_grid(const std::string& text);

// Each command writes machine-readable output only to `out` (when
// non-empty) and a human summary to `log`. Library errors are mapped to
// exit codes; nothing escapes as an exception.

struct CapacityCommand {
  std::string hamiltonian_path;
  SolverConfig cfg;
  std::string out;
};
int cmd_capacity(const CapacityCommand& cmd, std::ostream& log);

struct OptimalCommand {
  std::size_t dim = 2;
  std::string out;
};
int cmd_optimal(const OptimalCommand& cmd, std::ostream& log);

struct EvolveCommand {
  std::string state_path;
  std::string hamiltonian_path;
  GridSpec grid;
  std::string out;
};
int cmd_evolve(const EvolveCommand& cmd, std::ostream& log);

struct ScanGammaCommand {
  std::size_t dim = 2;
  int resolution = 100;
  std::string out;          // CSV rows gamma,f,sqrt2f
  std::string summary_out;  // JSON summary
};
int cmd_scan_gamma(const ScanGammaCommand& cmd, std::ostream& log);

struct VerifyCommand {
  VerifyLevel level = VerifyLevel::Fast;
  std::string out;
  std::uint64_t seed = VerifyOptions{}.seed;
};
int cmd_verify(const VerifyCommand& cmd, std::ostream& log);

// Report builders behind the commands.
Json capacity_result_json(const CapacityResult& result);
Json optimal_report(std::size_t dim);
Json scan_gamma_summary(std::size_t dim, int resolution);
std::string scan_gamma_csv(std::size_t dim, int resolution);

}  // namespace cohgen::cli
