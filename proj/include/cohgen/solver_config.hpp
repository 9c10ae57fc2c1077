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
#include <istream>
#include <string>

namespace cohgen {

struct SolverConfig {
  int restarts = 32;
  int max_iters = 2000;
  double grad_tol = 1e-9;
  double step_init = 0.1;
  std::uint64_t seed = 0;
  /// Search over mixed states rho = A A^dagger with a square A instead of
  /// pure states only.
  bool mixed_states = false;

  /// Throws InvalidArgument if any field is out of range.
  void validate() const;
};

/// Applies one `key=value` entry. Throws ParseError on unknown keys or
/// malformed values.
void apply_config_entry(SolverConfig& cfg, const std::string& key, const std::string& value);

/// Reads `key=value` lines on top of `base`. Blank lines and lines starting
/// with '#' are skipped.
SolverConfig parse_solver_config(std::istream& in, SolverConfig base = {});
SolverConfig load_solver_config(const std::string& path, SolverConfig base = {});

}  // namespace cohgen
