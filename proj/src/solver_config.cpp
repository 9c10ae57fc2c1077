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

#include "cohgen/solver_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "cohgen/error.hpp"

namespace cohgen {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::ParseError, "bad value for " + key + ": '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorCode::ParseError, "bad value for " + key + ": '" + value + "'");
}

}  // namespace

void SolverConfig::validate() const {
  if (restarts < 1) throw Error(ErrorCode::InvalidArgument, "restarts must be >= 1");
  if (max_iters < 1) throw Error(ErrorCode::InvalidArgument, "max_iters must be >= 1");
  if (!(grad_tol > 0.0) || !std::isfinite(grad_tol)) {
    throw Error(ErrorCode::InvalidArgument, "grad_tol must be > 0");
  }
  if (!(step_init > 0.0) || !std::isfinite(step_init)) {
    throw Error(ErrorCode::InvalidArgument, "step_init must be > 0");
  }
}

void apply_config_entry(SolverConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "restarts") {
    cfg.restarts = parse_number<int>(key, value);
  } else if (key == "max_iters") {
    cfg.max_iters = parse_number<int>(key, value);
  } else if (key == "grad_tol") {
    cfg.grad_tol = parse_number<double>(key, value);
  } else if (key == "step_init") {
    cfg.step_init = parse_number<double>(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "mixed_states") {
    cfg.mixed_states = parse_bool(key, value);
  } else {
    throw Error(ErrorCode::ParseError, "unknown solver config key '" + key + "'");
  }
}

SolverConfig parse_solver_config(std::istream& in, SolverConfig base) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_config_entry(base, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  base.validate();
  return base;
}

SolverConfig load_solver_config(const std::string& path, SolverConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open config " + path);
  return parse_solver_config(in, base);
}

}  // namespace cohgen
