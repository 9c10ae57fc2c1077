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

#include "cohgen/commands.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "cohgen/dynamics.hpp"

namespace cohgen::cli {

namespace {

Json metadata() {
  Json m;
  m["tool"] = "cohgen";
  m["version"] = kVersion;
  return m;
}

void emit(const std::string& path, const Json& report) {
  if (!path.empty()) write_text_file(path, dump_json(report));
}

int input_error(std::ostream& log, const std::exception& e) {
  log << "error: " << e.what() << '\n';
  return kInputError;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char sep1 = 0;
  char sep2 = 0;
  std::istringstream in(text);
  if (!(in >> g.start >> sep1 >> g.stop >> sep2 >> g.steps) || sep1 != ':' || sep2 != ':' ||
      !(in >> std::ws).eof()) {
    throw Error(ErrorCode::ParseError, "grid must look like start:stop:steps, got '" + text + "'");
  }
  if (g.steps < 1) throw Error(ErrorCode::ParseError, "grid steps must be >= 1");
  if (g.stop < g.start) throw Error(ErrorCode::ParseError, "grid stop must be >= start");
  return g;
}

Json capacity_result_json(const CapacityResult& result) {
  Json j;
  j["value"] = result.value;
  j["method"] = std::string(to_string(result.method));
  j["converged"] = result.converged;
  j["restarts_used"] = result.restarts_used;
  j["grad_norm"] = result.grad_norm;
  j["min_diag"] = result.min_diag;
  j["argmax_state"] = matrix_to_json(result.argmax_state.matrix());
  return j;
}

int cmd_capacity(const CapacityCommand& cmd, std::ostream& log) {
  std::optional<HermitianMatrix> parsed;
  try {
    cmd.cfg.validate();
    parsed = HermitianMatrix::from(read_matrix_file(cmd.hamiltonian_path));
    if (parsed->dim() < 2) {
      throw Error(ErrorCode::DimensionMismatch, "Hamiltonian must be at least 2x2");
    }
  } catch (const std::exception& e) {
    return input_error(log, e);
  }
  const HermitianMatrix& h = *parsed;

  Json report;
  report["metadata"] = metadata();
  report["dim"] = h.dim();
  report["seed"] = cmd.cfg.seed;
  report["restarts"] = cmd.cfg.restarts;
  report["hamiltonian_hs_norm"] = hs_norm(h.matrix());

  int exit_code = kSuccess;
  CapacityResult numeric = [&] {
    try {
      return capacity_numeric(h, cmd.cfg);
    } catch (const NoConvergenceError& e) {
      exit_code = kNoConvergence;
      return e.result();
    }
  }();
  report["numeric"] = capacity_result_json(numeric);

  const CapacityResult* headline = &numeric;
  std::optional<CapacityResult> qubit;
  if (h.dim() == 2) {
    qubit = capacity_qubit(h);
    report["qubit"] = capacity_result_json(*qubit);
    report["method_gap"] = std::abs(qubit->value - numeric.value);
    headline = &*qubit;
  }
  report["value"] = headline->value;
  report["method"] = std::string(to_string(headline->method));
  report["argmax_state"] = matrix_to_json(headline->argmax_state.matrix());
  report["converged"] = numeric.converged;
  emit(cmd.out, report);

  log << std::setprecision(10) << "C_gen(H) = " << headline->value << " bits per unit time ("
      << to_string(headline->method) << ")\n";
  if (qubit) {
    log << "numeric ascent: " << numeric.value << ", gap " << std::abs(qubit->value - numeric.value)
        << '\n';
  }
  if (exit_code == kNoConvergence) {
    log << "warning: no restart reached grad_tol " << cmd.cfg.grad_tol << " (best grad norm "
        << numeric.grad_norm << ")\n";
  }
  return exit_code;
}

Json optimal_report(std::size_t dim) {
  const GammaResult best = max_surprisal_variance(dim);
  const PureState psi = optimal_state(dim, best.gamma);
  const DensityMatrix sigma = psi.density();
  const HermitianMatrix h = optimal_hamiltonian(dim);
  const HermitianMatrix aligned = holder_hamiltonian(sigma);

  Json j;
  j["metadata"] = metadata();
  j["dim"] = dim;
  j["gamma"] = best.gamma;
  j["f_max"] = best.f_max;
  j["capacity_bound"] = best.capacity_bound;
  j["amplitudes"] = vector_to_json(psi.amplitudes());
  j["state"] = matrix_to_json(sigma.matrix());
  j["hamiltonian"] = matrix_to_json(h.matrix());
  j["derivative_at_state"] = coherence_derivative(h, sigma).analytic;
  // M / ||M||_2 for the emitted state; it attains the bound with that state
  j["aligned_hamiltonian"] = matrix_to_json(aligned.matrix());
  j["aligned_derivative"] = coherence_derivative(aligned, sigma).analytic;
  return j;
}

int cmd_optimal(const OptimalCommand& cmd, std::ostream& log) {
  try {
    if (cmd.dim < 2) throw Error(ErrorCode::InvalidArgument, "--dim must be >= 2");
    const Json report = optimal_report(cmd.dim);
    emit(cmd.out, report);
    log << std::setprecision(10) << "d = " << cmd.dim << ": gamma* = " << report["gamma"].get<double>()
        << ", max f = " << report["f_max"].get<double>()
        << ", capacity bound = " << report["capacity_bound"].get<double>() << '\n';
    return kSuccess;
  } catch (const std::exception& e) {
    return input_error(log, e);
  }
}

int cmd_evolve(const EvolveCommand& cmd, std::ostream& log) {
  try {
    const DensityMatrix rho = validate_density(read_matrix_file(cmd.state_path));
    const HermitianMatrix h = HermitianMatrix::from(read_matrix_file(cmd.hamiltonian_path));
    const Trajectory traj =
        trajectory(rho, h, linear_grid(cmd.grid.start, cmd.grid.stop, cmd.grid.steps));
    if (!cmd.out.empty()) {
      std::ostringstream csv;
      write_trajectory_csv(csv, traj);
      write_text_file(cmd.out, csv.str());
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < traj.coherence.size(); ++k) {
      if (traj.coherence[k] > traj.coherence[best]) best = k;
    }
    log << std::setprecision(10) << "max coherence " << traj.coherence[best] << " bits at t = "
        << traj.times[best] << " (" << traj.times.size() << " samples)\n";
    return kSuccess;
  } catch (const std::exception& e) {
    return input_error(log, e);
  }
}

std::string scan_gamma_csv(std::size_t dim, int resolution) {
  std::ostringstream out;
  out << "gamma,f,sqrt2f\n";
  for (int k = 0; k <= resolution; ++k) {
    const double gamma = static_cast<double>(k) / resolution;
    const double f = std::max(family_surprisal_variance(dim, gamma), 0.0);
    out << format_double(gamma) << ',' << format_double(f) << ',' << format_double(std::sqrt(2.0 * f))
        << '\n';
  }
  return out.str();
}

Json scan_gamma_summary(std::size_t dim, int resolution) {
  const GammaResult best = max_surprisal_variance(dim);
  Json j;
  j["metadata"] = metadata();
  j["dim"] = dim;
  j["resolution"] = resolution;
  j["gamma"] = best.gamma;
  j["f_max"] = best.f_max;
  j["capacity_bound"] = best.capacity_bound;
  return j;
}

int cmd_scan_gamma(const ScanGammaCommand& cmd, std::ostream& log) {
  try {
    if (cmd.dim < 2) throw Error(ErrorCode::InvalidArgument, "--dim must be >= 2");
    if (cmd.resolution < 2) throw Error(ErrorCode::InvalidArgument, "--resolution must be >= 2");
    if (!cmd.out.empty()) write_text_file(cmd.out, scan_gamma_csv(cmd.dim, cmd.resolution));
    const Json summary = scan_gamma_summary(cmd.dim, cmd.resolution);
    emit(cmd.summary_out, summary);
    log << std::setprecision(10) << "d = " << cmd.dim << ": gamma* = " << summary["gamma"].get<double>()
        << ", sqrt(2 f_max) = " << summary["capacity_bound"].get<double>() << '\n';
    return kSuccess;
  } catch (const std::exception& e) {
    return input_error(log, e);
  }
}

int cmd_verify(const VerifyCommand& cmd, std::ostream& log) {
  VerifyOptions options;
  options.level = cmd.level;
  options.seed = cmd.seed;
  VerifyReport report = [&] {
    try {
      return run_verification(options);
    } catch (const std::exception& e) {
      VerifyReport failed{cmd.level, {}};
      failed.checks.push_back({std::string("suite_error: ") + e.what(), 0.0, INFINITY, 0, false});
      return failed;
    }
  }();
  Json j = report.to_json();
  j["metadata"] = metadata();
  j["seed"] = cmd.seed;
  try {
    emit(cmd.out, j);
  } catch (const std::exception& e) {
    return input_error(log, e);
  }
  for (const CheckResult& c : report.checks) {
    log << (c.passed ? "[PASS] " : "[FAIL] ") << std::left << std::setw(40) << c.name
        << " residual " << std::setprecision(3) << std::scientific << c.residual << " <= "
        << c.tolerance << std::defaultfloat << '\n';
  }
  log << (report.all_passed() ? "all checks passed\n" : "verification FAILED\n");
  return report.all_passed() ? kSuccess : kVerificationFailure;
}

}  // namespace cohgen::cli
