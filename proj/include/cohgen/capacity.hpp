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
#include <functional>
#include <string_view>

#include "cohgen/coherence.hpp"
#include "cohgen/matrix.hpp"
#include "cohgen/solver_config.hpp"

namespace cohgen {

enum class CapacityMethod { QubitAnalytic, PureStateAscent, MixedStateAscent };

std::string_view to_string(CapacityMethod method);

/// C_gen(H): the largest dC_r/dt at t = 0 over input states.
struct CapacityResult {
  double value;  // bits per unit time
  DensityMatrix argmax_state;
  CapacityMethod method;
  int restarts_used;
  bool converged;
  double min_diag;
  /// Final projected gradient norm of the best restart (0 for QubitAnalytic).
  double grad_norm;
};

/// Thrown by capacity_numeric when no restart met grad_tol. The best value
/// found is still available.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(CapacityResult result);
  const CapacityResult& result() const noexcept { return result_; }

 private:
  CapacityResult result_;
};

/// Maximum of the surprisal variance over (gamma, (1-gamma)/(d-1), ...).
struct GammaResult {
  double gamma;
  double f_max;           // bits^2
  double capacity_bound;  // sqrt(2 f_max)
};

/// g(x) = sqrt(x(1-x)) log2((1-x)/x).
double qubit_profile(double x);
double qubit_profile_derivative(double x);

/// argmax of g on (0, 1/2), accurate to ~1e-15.
double qubit_optimal_population();

/// Exact qubit capacity: 2 |H_10| max_x g(x), attained by a pure state.
CapacityResult capacity_qubit(const HermitianMatrix& h);

/// Projected gradient ascent of Tr(H M(rho)) over pure states (or mixed
/// states when cfg.mixed_states) with random restarts. Deterministic given
/// cfg.seed. Throws NoConvergenceError if no restart reaches cfg.grad_tol.
CapacityResult capacity_numeric(const HermitianMatrix& h, const SolverConfig& cfg);

/// f(gamma) for the distribution (gamma, (1-gamma)/(d-1), ..., (1-gamma)/(d-1)).
double family_surprisal_variance(std::size_t d, double gamma);
double family_surprisal_variance_derivative(std::size_t d, double gamma);

GammaResult max_surprisal_variance(std::size_t d);

/// sqrt(gamma)|0> + sqrt((1-gamma)/(d-1)) sum_{i>=1} |i>.
PureState optimal_state(std::size_t d, double gamma);

/// i/sqrt(2) (|0><phi| - |phi><0|), |phi> = sum_{i>=1} |i>/sqrt(d-1).
HermitianMatrix optimal_hamiltonian(std::size_t d);

/// M / ||M||_2 with M = commutator_M(rho). Throws ZeroCommutator when M
/// vanishes.
HermitianMatrix holder_hamiltonian(const DensityMatrix& rho);

struct BoundEqualityReport {
  double lhs;  // derivative at the optimal pure state under its Holder Hamiltonian
  double rhs;  // sqrt(2 f_max(d))
  double gap;
};

BoundEqualityReport bound_equality_check(std::size_t d);

using CommutatorFn = std::function<HermitianMatrix(const DensityMatrix&)>;

/// Same check with a substitute for commutator_M; lhs is Tr(H m(sigma)) for
/// H = m(sigma) / ||m(sigma)||_2. Used to confirm the check rejects broken
/// implementations.
BoundEqualityReport bound_equality_check(std::size_t d, const CommutatorFn& commutator_fn);

struct SimplexGridResult {
  ProbabilityVector best_p;
  double f_best;
  /// Grid points other than best_p whose f lies within 1e-12 of f_best.
  std::size_t near_ties;
  std::size_t points;
};

/// Exhaustive scan of the simplex with spacing 1/resolution. Only meant as
/// a test oracle: d in {2, 3, 4}, resolution <= 400.
SimplexGridResult simplex_grid_oracle(std::size_t d, int resolution);

namespace detail {

/// Value Tr(rho G) and Euclidean gradient 2 G A of F(A) = Tr(H M(A A^dagger))
/// for a Frobenius-normalized A (d x r). Exposed for gradient checks.
struct AscentEval {
  double value;
  ComplexMatrix gradient;
};

AscentEval ascent_objective(const HermitianMatrix& h, const ComplexMatrix& a);

}  // namespace detail

}  // namespace cohgen
