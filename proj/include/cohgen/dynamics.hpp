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

#include <ostream>
#include <vector>

#include "cohgen/matrix.hpp"

namespace cohgen {

/// e^{-iHt} rho e^{iHt}, revalidated as a density matrix.
DensityMatrix evolve(const DensityMatrix& rho, const HermitianMatrix& h, double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> states;
  std::vector<double> coherence;  // bits
  std::vector<double> entropy;    // bits
};

/// Samples rho_t on an ascending, non-empty grid from a single
/// eigendecomposition of H.
Trajectory trajectory(const DensityMatrix& rho, const HermitianMatrix& h,
                      const std::vector<double>& t_grid);

/// Writes `t,coherence_bits,entropy_bits` rows with 17 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

/// Central difference [C_r(rho_h) - C_r(rho_-h)] / (2h), h in (0, 0.1].
double fd_derivative(const DensityMatrix& rho, const HermitianMatrix& h, double step);

/// Richardson extrapolation of two central differences (steps h and h/2);
/// error O(h^4).
double fd_derivative_richardson(const DensityMatrix& rho, const HermitianMatrix& h, double step);

struct EntropyDerivativeCheck {
  double lhs;  // central difference of S(rho_t) at t = 0
  double rhs;  // -Tr[rho_dot log2 rho] with rho_dot = -i[H, rho]
};

/// Both sides of dS/dt = -Tr[rho_dot log2 rho]. Throws SingularState unless
/// every eigenvalue of rho is at least 1e-10.
EntropyDerivativeCheck entropy_derivative_check(const DensityMatrix& rho, const HermitianMatrix& h,
                                                double step);

/// -Tr[Delta(rho_dot) log2 Delta(rho)], the dephased intermediate form of
/// the coherence derivative. Requires full-support diagonal.
double dephased_derivative_form(const DensityMatrix& rho, const HermitianMatrix& h);

/// Builds `steps` equally spaced samples from start to stop inclusive;
/// steps == 1 yields {start}.
std::vector<double> linear_grid(double start, double stop, int steps);

}  // namespace cohgen
