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

#include "cohgen/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "cohgen/golden_section.hpp"
#include "cohgen/sampling.hpp"

namespace cohgen {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kGammaEdge = 1e-12;
constexpr double kBracketTol = 1e-10;
constexpr double kPopulationFloor = 1e-12;
constexpr double kArmijo = 1e-4;
constexpr double kZeroCommutator = 1e-12;
constexpr int kMaxPolishSteps = 8;

// Golden-section on [lo, hi], then bisection on the analytic derivative
// near the golden-section estimate to recover digits lost on the flat top.
template <typename F, typename DF>
ScalarOptimum maximize_unimodal(F&& f, DF&& df, double lo, double hi) {
  ScalarOptimum best = golden_section_maximize(f, lo, hi, kBracketTol);
  const double half_width = 1e-6;
  const double a = std::max(lo, best.x - half_width);
  const double b = std::min(hi, best.x + half_width);
  if (const auto x = bisect_stationary_point(df, a, b)) best = {*x, f(*x), best.iterations};
  return best;
}

struct AscentState {
  ComplexMatrix a;
  double value;
  double grad_norm;
  bool converged;
};

// Keeps every population rho_kk above kPopulationFloor and renormalizes.
void floor_and_normalize(ComplexMatrix& a) {
  a.normalize();
  bool changed = false;
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const double p = a.row(k).squaredNorm();
    if (p >= kPopulationFloor) continue;
    changed = true;
    if (p > 0.0) {
      a.row(k) *= std::sqrt(kPopulationFloor / p);
    } else {
      a(k, 0) = std::sqrt(kPopulationFloor);
    }
  }
  if (changed) a.normalize();
}

// Projected gradient on the unit sphere, minus outward-pointing components
// at rows held on the population floor (they cannot move further).
double stationarity(const ComplexMatrix& a, const ComplexMatrix& tangent) {
  double total = 0.0;
  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    auto row = tangent.row(k);
    const double p = a.row(k).squaredNorm();
    if (p <= kPopulationFloor * (1.0 + 1e-6)) {
      const double radial = (a.row(k).conjugate().cwiseProduct(row)).sum().real();
      if (radial < 0.0) {
        const ComplexMatrix rest = row - (radial / p) * a.row(k);
        total += rest.squaredNorm();
        continue;
      }
    }
    total += row.squaredNorm();
  }
  return std::sqrt(total);
}

ComplexMatrix sphere_tangent(const ComplexMatrix& a, const ComplexMatrix& gradient) {
  const double radial = (a.conjugate().cwiseProduct(gradient)).sum().real();
  return gradient - radial * a;
}

// Newton iterations on the stationarity equation tangent(A) = 0, restricted
// to rows above the population floor. Line search stalls once value changes
// drop below rounding (|g| ~ sqrt(eps)); the gradient itself stays accurate
// to machine precision, so solving for its zero recovers the missing digits.
// The Jacobian comes from central differences of the analytic gradient and
// is solved in the least-squares sense (phase gauge and the radial direction
// are null directions).
void newton_polish(const HermitianMatrix& h, AscentState& state, int max_steps, double grad_tol) {
  constexpr double kJacobianStep = 1e-7;
  ComplexMatrix& a = state.a;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Eigen::Index> free_rows;
  for (Eigen::Index k = 0; k < rows; ++k) {
    if (a.row(k).squaredNorm() > kPopulationFloor * (1.0 + 1e-6)) free_rows.push_back(k);
  }
  const auto n_vars = static_cast<Eigen::Index>(2 * free_rows.size()) * cols;
  const auto residual = [&](const ComplexMatrix& m) {
    const ComplexMatrix t = sphere_tangent(m, detail::ascent_objective(h, m).gradient);
    Eigen::VectorXd r(n_vars);
    Eigen::Index idx = 0;
    for (Eigen::Index k : free_rows) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        r(idx++) = t(k, j).real();
        r(idx++) = t(k, j).imag();
      }
    }
    return r;
  };
  const auto perturbed = [&](const ComplexMatrix& m, Eigen::Index var, double delta) {
    ComplexMatrix out = m;
    const Eigen::Index k = free_rows[static_cast<std::size_t>(var / (2 * cols))];
    const Eigen::Index j = (var / 2) % cols;
    out(k, j) += var % 2 == 0 ? Complex(delta, 0.0) : Complex(0.0, delta);
    return out;
  };
  for (int step = 0; step < max_steps; ++step) {
    const Eigen::VectorXd r0 = residual(a);
    Eigen::MatrixXd jac(n_vars, n_vars);
    for (Eigen::Index v = 0; v < n_vars; ++v) {
      jac.col(v) = (residual(perturbed(a, v, kJacobianStep)) -
                    residual(perturbed(a, v, -kJacobianStep))) / (2.0 * kJacobianStep);
    }
    const Eigen::VectorXd dx = jac.completeOrthogonalDecomposition().solve(-r0);
    ComplexMatrix trial = a;
    for (Eigen::Index v = 0; v < n_vars; ++v) trial = perturbed(trial, v, dx(v));
    floor_and_normalize(trial);
    const detail::AscentEval eval = detail::ascent_objective(h, trial);
    const double norm = stationarity(trial, sphere_tangent(trial, eval.gradient));
    // a Newton step may head for a nearby saddle; keep only steps that
    // reduce the residual without losing value beyond rounding
    const double slack = 1e-12 * std::max(1.0, std::abs(state.value));
    if (!(norm < state.grad_norm) || eval.value < state.value - slack) break;
    a = std::move(trial);
    state.value = eval.value;
    state.grad_norm = norm;
  }
  state.converged = state.grad_norm <= grad_tol;
}

AscentState ascend(const HermitianMatrix& h, ComplexMatrix a, const SolverConfig& cfg) {
  floor_and_normalize(a);
  detail::AscentEval eval = detail::ascent_objective(h, a);
  double step = cfg.step_init;
  int used = 0;
  for (; used < cfg.max_iters; ++used) {
    const ComplexMatrix tangent = sphere_tangent(a, eval.gradient);
    if (stationarity(a, tangent) <= cfg.grad_tol) break;
    const double slope = tangent.squaredNorm();
    bool accepted = false;
    for (int halvings = 0; halvings < 80; ++halvings) {
      ComplexMatrix trial = a + step * tangent;
      floor_and_normalize(trial);
      detail::AscentEval trial_eval = detail::ascent_objective(h, trial);
      // a strict increase is required: ties mean the step is lost in rounding
      if (trial_eval.value > eval.value && trial_eval.value >= eval.value + kArmijo * step * slope) {
        a = std::move(trial);
        eval = std::move(trial_eval);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      ++used;
      break;  // value changes are below rounding; Newton takes over
    }
    step = std::min(step * 2.0, 1e6);
  }
  AscentState state{a, eval.value, stationarity(a, sphere_tangent(a, eval.gradient)), false};

  // polishing steps share the iteration budget with the ascent
  newton_polish(h, state, std::min(kMaxPolishSteps, cfg.max_iters - used), cfg.grad_tol);
  return state;
}

}  // namespace

std::string_view to_string(CapacityMethod method) {
  switch (method) {
    case CapacityMethod::QubitAnalytic: return "QubitAnalytic";
    case CapacityMethod::PureStateAscent: return "PureStateAscent";
    case CapacityMethod::MixedStateAscent: return "MixedStateAscent";
  }
  return "Unknown";
}

NoConvergenceError::NoConvergenceError(CapacityResult result)
    : Error(ErrorCode::NoConvergence,
            "no restart reached the gradient tolerance; best value " + std::to_string(result.value)),
      result_(std::move(result)) {}

namespace detail {

AscentEval ascent_objective(const HermitianMatrix& h, const ComplexMatrix& a) {
  const ComplexMatrix& hm = h.matrix();
  const Eigen::Index n = hm.rows();
  const ComplexMatrix rho = a * a.adjoint();
  RealVector pops(n);
  RealVector logs(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    pops(k) = rho(k, k).real();
    logs(k) = std::log2(pops(k));
  }
  // K = i [L, H] with L = log2 Delta(rho); F = Tr(rho K).
  const Complex imag_unit(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = imag_unit * (logs(i) - logs(j)) * hm(i, j);
    }
  }
  const double value = (rho.transpose().cwiseProduct(g)).sum().real();
  // dF/dp_k = -2 Im((H rho)_kk) / (p_k ln 2) enters through dp_k = d rho_kk.
  const ComplexMatrix h_rho = hm * rho;
  for (Eigen::Index k = 0; k < n; ++k) {
    g(k, k) += -2.0 * h_rho(k, k).imag() / (pops(k) * kLn2);
  }
  return {value, 2.0 * g * a};
}

}  // namespace detail

double qubit_profile(double x) {
  return std::sqrt(x * (1.0 - x)) * std::log2((1.0 - x) / x);
}

double qubit_profile_derivative(double x) {
  const double root = std::sqrt(x * (1.0 - x));
  return (1.0 - 2.0 * x) / (2.0 * root) * std::log2((1.0 - x) / x) - 1.0 / (root * kLn2);
}

double qubit_optimal_population() {
  static const double x_star =
      maximize_unimodal(qubit_profile, qubit_profile_derivative, kGammaEdge, 0.5).x;
  return x_star;
}

CapacityResult capacity_qubit(const HermitianMatrix& h) {
  if (h.dim() != 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "capacity_qubit needs a 2x2 Hamiltonian, got dim " + std::to_string(h.dim()));
  }
  const double coupling = std::abs(h(1, 0));
  if (coupling == 0.0) {
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = 1.0;
    return {0.0, DensityMatrix::from(rho), CapacityMethod::QubitAnalytic, 0, true, 0.0, 0.0};
  }
  const double x = qubit_optimal_population();
  // rho_01 = |rho_01| e^{i alpha} with alpha = arg(H_01) - pi/2
  const double alpha = std::arg(h(0, 1)) - std::numbers::pi / 2.0;
  ComplexVector psi(2);
  psi(0) = std::sqrt(x);
  psi(1) = std::polar(std::sqrt(1.0 - x), -alpha);
  const PureState state = PureState::from(psi);
  return {2.0 * coupling * qubit_profile(x),
          state.density(),
          CapacityMethod::QubitAnalytic,
          0,
          true,
          x,
          0.0};
}

CapacityResult capacity_numeric(const HermitianMatrix& h, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t d = h.dim();
  if (d < 2) throw Error(ErrorCode::DimensionMismatch, "capacity_numeric needs d >= 2");
  const auto n = static_cast<Eigen::Index>(d);
  const Eigen::Index rank = cfg.mixed_states ? n : 1;
  // The objective is linear in H; searching with the unit-norm Hamiltonian
  // makes step sizes and grad_tol independent of the scale of H.
  const double scale = hs_norm(h.matrix());
  const HermitianMatrix unit = scale > 0.0 ? h.scaled(1.0 / scale) : h;

  bool any_converged = false;
  AscentState best{ComplexMatrix(), -std::numeric_limits<double>::infinity(), 0.0, false};
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng = make_rng(cfg.seed, static_cast<std::uint64_t>(r));
    AscentState run = ascend(unit, random_ginibre(n, rank, rng), cfg);
    any_converged = any_converged || run.converged;
    if (run.value > best.value) best = std::move(run);
  }

  ComplexMatrix rho = best.a * best.a.adjoint();
  rho /= rho.trace().real();
  const DensityMatrix state = DensityMatrix::from(ComplexMatrix(0.5 * (rho + rho.adjoint())));
  const DerivativeReport report = coherence_derivative(h, state);
  CapacityResult result{std::max(report.analytic, 0.0),
                        state,
                        cfg.mixed_states ? CapacityMethod::MixedStateAscent
                                         : CapacityMethod::PureStateAscent,
                        cfg.restarts,
                        any_converged,
                        report.min_diag,
                        best.grad_norm};
  if (!any_converged) throw NoConvergenceError(std::move(result));
  return result;
}

double family_surprisal_variance(std::size_t d, double gamma) {
  const double tail = (1.0 - gamma) / static_cast<double>(d - 1);
  const double a = gamma > 0.0 ? std::log2(gamma) : 0.0;
  const double b = tail > 0.0 ? std::log2(tail) : 0.0;
  const double mean = -(gamma * a + (1.0 - gamma) * b);
  const double second = gamma * a * a + (1.0 - gamma) * b * b;
  return second - mean * mean;
}

double family_surprisal_variance_derivative(std::size_t d, double gamma) {
  const double tail = (1.0 - gamma) / static_cast<double>(d - 1);
  const double a = std::log2(gamma);
  const double b = std::log2(tail);
  const double mean = -(gamma * a + (1.0 - gamma) * b);
  const double d_mean = b - a;
  const double d_second = a * a + 2.0 * a / kLn2 - b * b - 2.0 * b / kLn2;
  return d_second - 2.0 * mean * d_mean;
}

GammaResult max_surprisal_variance(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "max_surprisal_variance needs d >= 2");
  // f vanishes at the uniform point gamma = 1/d and is unimodal on each side.
  const auto f = [d](double g) { return family_surprisal_variance(d, g); };
  const auto df = [d](double g) { return family_surprisal_variance_derivative(d, g); };
  const double uniform = 1.0 / static_cast<double>(d);
  const ScalarOptimum low = maximize_unimodal(f, df, kGammaEdge, uniform);
  const ScalarOptimum high = maximize_unimodal(f, df, uniform, 1.0 - kGammaEdge);
  // ties (d = 2 is symmetric) go to the smaller gamma
  const ScalarOptimum& best = high.value > low.value * (1.0 + 1e-12) ? high : low;
  return {best.x, best.value, std::sqrt(2.0 * best.value)};
}

PureState optimal_state(std::size_t d, double gamma) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "optimal_state needs d >= 2");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw Error(ErrorCode::InvalidGamma, "gamma must lie in (0, 1)", gamma);
  }
  const auto n = static_cast<Eigen::Index>(d);
  ComplexVector psi = ComplexVector::Constant(n, std::sqrt((1.0 - gamma) / static_cast<double>(d - 1)));
  psi(0) = std::sqrt(gamma);
  return PureState::from(psi);
}

HermitianMatrix optimal_hamiltonian(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "optimal_hamiltonian needs d >= 2");
  const auto n = static_cast<Eigen::Index>(d);
  const double c = 1.0 / std::sqrt(2.0 * static_cast<double>(d - 1));
  ComplexMatrix h = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 1; j < n; ++j) {
    h(0, j) = Complex(0.0, c);
    h(j, 0) = Complex(0.0, -c);
  }
  return HermitianMatrix::from(h);
}

HermitianMatrix holder_hamiltonian(const DensityMatrix& rho) {
  const HermitianMatrix m = commutator_M(rho);
  const double norm = hs_norm(m.matrix());
  if (norm < kZeroCommutator) {
    throw Error(ErrorCode::ZeroCommutator,
                "[rho, log2 Delta(rho)] vanishes; no Hamiltonian changes C_r to first order", norm);
  }
  return m.scaled(1.0 / norm);
}

BoundEqualityReport bound_equality_check(std::size_t d) {
  const GammaResult best = max_surprisal_variance(d);
  const DensityMatrix sigma = optimal_state(d, best.gamma).density();
  const double lhs = coherence_derivative(holder_hamiltonian(sigma), sigma).analytic;
  return {lhs, best.capacity_bound, std::abs(lhs - best.capacity_bound)};
}

BoundEqualityReport bound_equality_check(std::size_t d, const CommutatorFn& commutator_fn) {
  const GammaResult best = max_surprisal_variance(d);
  const DensityMatrix sigma = optimal_state(d, best.gamma).density();
  const HermitianMatrix m = commutator_fn(sigma);
  const double norm = hs_norm(m.matrix());
  if (norm < kZeroCommutator) {
    throw Error(ErrorCode::ZeroCommutator, "commutator vanishes at the optimal state", norm);
  }
  const double lhs = hs_inner(m.matrix(), m.matrix()).real() / norm;
  return {lhs, best.capacity_bound, std::abs(lhs - best.capacity_bound)};
}

SimplexGridResult simplex_grid_oracle(std::size_t d, int resolution) {
  if (d < 2 || d > 4) {
    throw Error(ErrorCode::InvalidArgument, "simplex_grid_oracle supports d in {2, 3, 4}");
  }
  if (resolution > 400) {
    throw Error(ErrorCode::ResolutionTooLarge, "resolution must be <= 400",
                static_cast<double>(resolution));
  }
  if (resolution < 1) throw Error(ErrorCode::InvalidArgument, "resolution must be >= 1");

  const auto n = static_cast<Eigen::Index>(d);
  std::vector<int> counts(d, 0);
  RealVector p(n);
  RealVector best_p(n);
  double f_best = -1.0;
  std::size_t ties = 0;
  std::size_t points = 0;
  const double spacing = 1.0 / static_cast<double>(resolution);

  // Enumerate compositions of `resolution` into d nonnegative parts.
  const auto visit = [&] {
    ++points;
    for (Eigen::Index i = 0; i < n; ++i) p(i) = counts[static_cast<std::size_t>(i)] * spacing;
    double first = 0.0;
    double second = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (p(i) <= 0.0) continue;
      const double s = -std::log2(p(i));
      first += p(i) * s;
      second += p(i) * s * s;
    }
    const double f = second - first * first;
    if (f > f_best + 1e-12) {
      f_best = f;
      best_p = p;
      ties = 0;
    } else if (std::abs(f - f_best) <= 1e-12) {
      ++ties;
    }
  };
  const auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == d) {
      counts[slot] = remaining;
      visit();
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[slot] = c;
      self(self, slot + 1, remaining - c);
    }
  };
  recurse(recurse, 0, resolution);
  // renormalize against accumulated spacing error before validation
  best_p /= best_p.sum();
  return {ProbabilityVector::from(best_p), f_best, ties, points};
}

}  // namespace cohgen
