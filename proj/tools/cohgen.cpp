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

// cohgen: coherence generating capacity of Hamiltonians.
//
//   cohgen capacity H.json [--seed N] [--restarts N] [--config solver.cfg] [--out report.json]
//   cohgen optimal --dim D [--out optimal.json]
//   cohgen evolve STATE.json H.json --grid 0:2:200 [--out traj.csv]
//   cohgen scan-gamma --dim D [--resolution N] [--out scan.csv] [--summary summary.json]
//   cohgen verify [--level fast|full] [--seed N] [--out report.json]
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 solver non-convergence.

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cohgen/commands.hpp"
#include "cohgen/solver_config.hpp"

int main(int argc, char** argv) {
  using namespace cohgen;
  using namespace cohgen::cli;

  CLI::App app{"cohgen: coherence-generating capacity calculator"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CapacityCommand capacity;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
  std::optional<int> max_iters;
  std::optional<double> grad_tol;
  bool mixed = false;
  auto* cap = app.add_subcommand("capacity", "compute C_gen(H) for a Hamiltonian");
  cap->add_option("hamiltonian", capacity.hamiltonian_path, "Hamiltonian matrix JSON")->required();
  cap->add_option("--config", config_path, "solver config file (key=value lines)");
  cap->add_option("--seed", seed, "random seed for restarts");
  cap->add_option("--restarts", restarts, "number of random restarts");
  cap->add_option("--max-iters", max_iters, "iteration cap per restart");
  cap->add_option("--grad-tol", grad_tol, "gradient-norm convergence tolerance");
  cap->add_flag("--mixed", mixed, "search mixed states instead of pure states");
  cap->add_option("--out", capacity.out, "JSON report path");

  OptimalCommand optimal;
  auto* opt = app.add_subcommand("optimal", "emit the optimal state and Hamiltonian for dimension d");
  opt->add_option("--dim", optimal.dim, "Hilbert space dimension")->required()->check(CLI::Range(2, 4096));
  opt->add_option("--out", optimal.out, "JSON output path");

  EvolveCommand evolve;
  std::string grid_text = "0:1:101";
  auto* evo = app.add_subcommand("evolve", "sample C_r(rho_t) and S(rho_t) along e^{-iHt}");
  evo->add_option("state", evolve.state_path, "density matrix JSON")->required();
  evo->add_option("hamiltonian", evolve.hamiltonian_path, "Hamiltonian matrix JSON")->required();
  evo->add_option("--grid", grid_text, "time grid start:stop:steps")->capture_default_str();
  evo->add_option("--out", evolve.out, "trajectory CSV path");

  ScanGammaCommand scan;
  auto* scg = app.add_subcommand("scan-gamma", "scan f over the (gamma, uniform tail) family");
  scg->add_option("--dim", scan.dim, "Hilbert space dimension")->required()->check(CLI::Range(2, 4096));
  scg->add_option("--resolution", scan.resolution, "number of gamma intervals")->capture_default_str();
  scg->add_option("--out", scan.out, "CSV output path");
  scg->add_option("--summary", scan.summary_out, "JSON summary path");

  VerifyCommand verify;
  std::string level = "fast";
  auto* ver = app.add_subcommand("verify", "run the identity and property checks");
  ver->add_option("--level", level, "fast or full")->capture_default_str()->check(CLI::IsMember({"fast", "full"}));
  ver->add_option("--seed", verify.seed, "random seed")->capture_default_str();
  ver->add_option("--out", verify.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (cap->parsed()) {
      if (!config_path.empty()) capacity.cfg = load_solver_config(config_path);
      if (seed) capacity.cfg.seed = *seed;
      if (restarts) capacity.cfg.restarts = *restarts;
      if (max_iters) capacity.cfg.max_iters = *max_iters;
      if (grad_tol) capacity.cfg.grad_tol = *grad_tol;
      if (mixed) capacity.cfg.mixed_states = true;
      return cmd_capacity(capacity, std::cout);
    }
    if (opt->parsed()) return cmd_optimal(optimal, std::cout);
    if (evo->parsed()) {
      evolve.grid = parse_grid(grid_text);
      return cmd_evolve(evolve, std::cout);
    }
    if (scg->parsed()) return cmd_scan_gamma(scan, std::cout);
    if (ver->parsed()) {
      verify.level = parse_verify_level(level);
      return cmd_verify(verify, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
