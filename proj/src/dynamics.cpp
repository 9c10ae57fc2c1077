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

#include "cohgen/dynamics.hpp"

#include <cmath>
#include <string>

#include "cohgen/coherence.hpp"
#include "cohgen/matrix_json.hpp"

namespace cohgen {

namespace {

constexpr double kMinEigenvalue = 1e-10;

DensityMatrix conjugate_by(const ComplexMatrix& u, const DensityMatrix& rho) {
  const ComplexMatrix out = u * rho.matrix() * u.adjoint();
  return DensityMatrix::from(ComplexMatrix(0.5 * (out + out.adjoint())));
}

void require_step(double step) {
  if (!(step > 0.0 && step <= 0.1)) {
    throw Error(ErrorCode::InvalidArgument, "finite-difference step must lie in (0, 0.1]", step);
  }
}

}  // namespace

DensityMatrix evolve(const DensityMatrix& rho, const HermitianMatrix& h, double t) {
  require_same_dim(rho.matrix(), h.matrix());
  if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "time must be finite");
  return conjugate_by(unitary_exp(h, t), rho);
}

Trajectory trajectory(const DensityMatrix& rho, const HermitianMatrix& h,
                      const std::vector<double>& t_grid) {
  require_same_dim(rho.matrix(), h.matrix());
  if (t_grid.empty()) throw Error(ErrorCode::InvalidArgument, "time grid is empty");
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!(t_grid[k] >= t_grid[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "time grid must be ascending");
    }
  }
  const Propagator propagator(h);
  Trajectory traj;
  traj.times = t_grid;
  traj.states.reserve(t_grid.size());
  for (double t : t_grid) {
    DensityMatrix state = conjugate_by(propagator.at(t), rho);
    traj.coherence.push_back(rel_entropy_coherence(state));
    traj.entropy.push_back(von_neumann_entropy(state));
    traj.states.push_back(std::move(state));
  }
  return traj;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t,coherence_bits,entropy_bits\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << format_double(traj.times[k]) << ',' << format_double(traj.coherence[k]) << ','
        << format_double(traj.entropy[k]) << '\n';
  }
}

double fd_derivative(const DensityMatrix& rho, const HermitianMatrix& h, double step) {
  require_step(step);
  const Propagator propagator(h);
  const double forward = rel_entropy_coherence(conjugate_by(propagator.at(step), rho));
  const double backward = rel_entropy_coherence(conjugate_by(propagator.at(-step), rho));
  return (forward - backward) / (2.0 * step);
}

double fd_derivative_richardson(const DensityMatrix& rho, const HermitianMatrix& h, double step) {
  const double coarse = fd_derivative(rho, h, step);
  const double fine = fd_derivative(rho, h, 0.5 * step);
  return (4.0 * fine - coarse) / 3.0;
}

EntropyDerivativeCheck entropy_derivative_check(const DensityMatrix& rho, const HermitianMatrix& h,
                                                double step) {
  require_same_dim(rho.matrix(), h.matrix());
  require_step(step);
  const ComplexMatrix log_rho = log2_positive(rho.hermitian(), kMinEigenvalue);
  const Propagator propagator(h);
  const double forward = von_neumann_entropy(conjugate_by(propagator.at(step), rho));
  const double backward = von_neumann_entropy(conjugate_by(propagator.at(-step), rho));
  const Complex minus_i(0.0, -1.0);
  const ComplexMatrix rho_dot = minus_i * commutator(h.matrix(), rho.matrix());
  const double rhs = -(rho_dot * log_rho).trace().real();
  return {(forward - backward) / (2.0 * step), rhs};
}

double dephased_derivative_form(const DensityMatrix& rho, const HermitianMatrix& h) {
  require_same_dim(rho.matrix(), h.matrix());
  const RealVector pops = rho.diagonal();
  if (pops.minCoeff() < kZeroDiagonal) {
    throw Error(ErrorCode::SingularState, "dephased form needs a full-support diagonal",
                pops.minCoeff());
  }
  const Complex minus_i(0.0, -1.0);
  const ComplexMatrix rho_dot = minus_i * commutator(h.matrix(), rho.matrix());
  const ComplexMatrix dephased_dot = rho_dot.diagonal().asDiagonal();
  const ComplexMatrix log_dephased = RealVector(pops.array().log() / std::log(2.0)).cast<Complex>().asDiagonal();
  return -(dephased_dot * log_dephased).trace().real();
}

std::vector<double> linear_grid(double start, double stop, int steps) {
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one step");
  if (!std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    throw Error(ErrorCode::InvalidArgument, "grid must satisfy start <= stop");
  }
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) {
    grid[static_cast<std::size_t>(k)] =
        steps == 1 ? start : start + (stop - start) * k / static_cast<double>(steps - 1);
  }
  return grid;
}

}  // namespace cohgen
