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

#include "cohgen/verify.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "cohgen/coherence.hpp"
#include "cohgen/dynamics.hpp"
#include "cohgen/sampling.hpp"

namespace cohgen {

namespace {

class Suite {
 public:
  explicit Suite(VerifyReport& report) : report_(report) {}

  void add(std::string name, double tolerance, double residual, long samples) {
    const bool passed = std::isfinite(residual) && residual <= tolerance;
    report_.checks.push_back({std::move(name), tolerance, residual, samples, passed});
  }

 private:
  VerifyReport& report_;
};

double trace_real(const ComplexMatrix& m) { return m.trace().real(); }

ComplexMatrix log2_dephased(const DensityMatrix& b) {
  const RealVector pops = b.diagonal();
  return RealVector(pops.array().log() / std::log(2.0)).cast<Complex>().asDiagonal();
}

}  // namespace

std::string_view to_string(VerifyLevel level) {
  return level == VerifyLevel::Fast ? "fast" : "full";
}

VerifyLevel parse_verify_level(const std::string& text) {
  if (text == "fast") return VerifyLevel::Fast;
  if (text == "full") return VerifyLevel::Full;
  throw Error(ErrorCode::ParseError, "verify level must be 'fast' or 'full', got '" + text + "'");
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
  Json out;
  out["level"] = std::string(to_string(level));
  out["passed"] = all_passed();
  Json list = Json::array();
  for (const CheckResult& c : checks) {
    Json item;
    item["name"] = c.name;
    item["tolerance"] = c.tolerance;
    item["residual"] = c.residual;
    item["samples"] = c.samples;
    item["passed"] = c.passed;
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  return out;
}

double loglog_slope(const std::vector<double>& steps, const std::vector<double>& residuals) {
  const std::size_t n = steps.size();
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += std::log(steps[k]);
    my += std::log(residuals[k]);
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double dx = std::log(steps[k]) - mx;
    sxy += dx * (std::log(residuals[k]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

double simplex_grid_tolerance(std::size_t d, int resolution) {
  const GammaResult best = max_surprisal_variance(d);
  const auto free = static_cast<Eigen::Index>(d - 1);
  // free coordinates p_1..p_{d-1}; p_0 = 1 - sum
  RealVector x0 = RealVector::Constant(free, (1.0 - best.gamma) / static_cast<double>(d - 1));
  const auto f = [&](const RealVector& x) {
    RealVector p(free + 1);
    p(0) = 1.0 - x.sum();
    p.tail(free) = x;
    return surprisal_variance(ProbabilityVector::from(p));
  };
  const double h = 1e-4;
  Eigen::MatrixXd hess(free, free);
  for (Eigen::Index i = 0; i < free; ++i) {
    for (Eigen::Index j = 0; j < free; ++j) {
      RealVector pp = x0, pm = x0, mp = x0, mm = x0;
      pp(i) += h; pp(j) += h;
      pm(i) += h; pm(j) -= h;
      mp(i) -= h; mp(j) += h;
      mm(i) -= h; mm(j) -= h;
      hess(i, j) = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * h * h);
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (hess + hess.transpose()));
  const double kappa = es.eigenvalues().cwiseAbs().maxCoeff();
  const double spacing = 1.0 / static_cast<double>(resolution);
  return 2.0 * kappa * static_cast<double>(d - 1) * spacing * spacing / 8.0;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report{options.level, {}};
  Suite suite(report);
  const bool full = options.level == VerifyLevel::Full;
  const int identity_samples = full ? 1000 : 100;
  const int fd_samples = full ? 200 : 30;
  const int bound_samples = full ? 10000 : 500;
  const int qubit_samples = full ? 100 : 10;
  const auto& m_of = options.commutator;

  // Tr[Delta(A) log2 Delta(B)] = Tr[A log2 Delta(B)]
  {
    Rng rng = make_rng(options.seed, 1);
    double worst = 0.0;
    long n = 0;
    for (std::size_t d = 2; d <= 6; ++d) {
      for (int s = 0; s < identity_samples; ++s, ++n) {
        const HermitianMatrix a = random_hermitian(d, rng);
        const DensityMatrix b = random_density(d, rng);
        const ComplexMatrix log_b = log2_dephased(b);
        const ComplexMatrix dephased_a = a.matrix().diagonal().asDiagonal();
        worst = std::max(worst, std::abs(trace_real(dephased_a * log_b) - trace_real(a.matrix() * log_b)));
      }
    }
    suite.add("dephasing_log_identity", 1e-10, worst, n);
  }

  // pairwise form vs variance form of f
  {
    Rng rng = make_rng(options.seed, 2);
    double worst = 0.0;
    long n = 0;
    for (std::size_t d = 2; d <= 6; ++d) {
      for (int s = 0; s < identity_samples; ++s, ++n) {
        const DensityMatrix rho = random_density(d, rng);
        worst = std::max(worst, std::abs(surprisal_variance_pairform(rho) -
                                         surprisal_variance(diagonal_distribution(rho))));
      }
    }
    suite.add("surprisal_variance_forms", 1e-10, worst, n);
  }

  // C_r >= 0, M Hermitian and traceless, entrywise and Holder bounds
  {
    Rng rng = make_rng(options.seed, 3);
    double negativity = 0.0;
    double m_structure = 0.0;
    double entrywise = 0.0;
    double pure_equality = 0.0;
    double holder = 0.0;
    long n = 0;
    for (std::size_t d = 2; d <= 6; ++d) {
      for (int s = 0; s < identity_samples; ++s, ++n) {
        const DensityMatrix rho = random_density(d, rng, 1 + static_cast<std::size_t>(s) % d);
        negativity = std::max(negativity, -rel_entropy_coherence(rho));
        const HermitianMatrix m = m_of(rho);
        m_structure = std::max({m_structure, (m.matrix() - m.matrix().adjoint()).cwiseAbs().maxCoeff(),
                                std::abs(m.matrix().trace())});
        const double m_norm = hs_norm(m.matrix());
        const double two_f = 2.0 * surprisal_variance_pairform(rho);
        entrywise = std::max(entrywise, m_norm * m_norm - two_f);
        const HermitianMatrix h = random_unit_hermitian(d, rng);
        holder = std::max(holder, hs_inner(h.matrix(), m.matrix()).real() - m_norm);

        const DensityMatrix pure = random_pure(d, rng).density();
        const double pure_norm = hs_norm(m_of(pure).matrix());
        pure_equality = std::max(pure_equality, std::abs(pure_norm * pure_norm -
                                                         2.0 * surprisal_variance_pairform(pure)));
      }
    }
    suite.add("coherence_nonnegative", 1e-12, std::max(negativity, 0.0), n);
    suite.add("commutator_hermitian_traceless", 1e-12, m_structure, n);
    suite.add("commutator_entrywise_bound", 1e-10, std::max(entrywise, 0.0), n);
    suite.add("commutator_pure_state_equality", 1e-10, pure_equality, n);
    suite.add("holder_bound", 1e-10, std::max(holder, 0.0), n);
  }

  // Holder saturation: H = M / ||M||_2 attains ||M||_2
  {
    Rng rng = make_rng(options.seed, 4);
    double worst = 0.0;
    long n = 0;
    for (int s = 0; s < identity_samples; ++s, ++n) {
      const std::size_t d = 2 + static_cast<std::size_t>(s) % 5;
      const DensityMatrix rho = random_density(d, rng);
      const HermitianMatrix m = m_of(rho);
      const double norm = hs_norm(m.matrix());
      const HermitianMatrix h = m.scaled(1.0 / norm);
      worst = std::max(worst, std::abs(coherence_derivative(h, rho).analytic - norm));
    }
    suite.add("holder_saturation", 1e-9, worst, n);
  }

  // finite differences of C_r(rho_t) against Tr(H M), plus h^2 scaling
  {
    Rng rng = make_rng(options.seed, 5);
    const std::vector<double> steps{1e-2, 1e-3, 1e-4};
    std::vector<double> mean_residual(steps.size(), 0.0);
    double worst = 0.0;
    double dephased_gap = 0.0;
    long n = 0;
    for (std::size_t d = 2; d <= 4; ++d) {
      for (int s = 0; s < fd_samples; ++s, ++n) {
        const DensityMatrix rho = random_density(d, rng);
        const HermitianMatrix h = random_hermitian(d, rng);
        const HermitianMatrix m = m_of(rho);
        const double analytic = hs_inner(h.matrix(), m.matrix()).real();
        for (std::size_t k = 0; k < steps.size(); ++k) {
          const double residual = std::abs(fd_derivative(rho, h, steps[k]) - analytic);
          mean_residual[k] += residual;
          if (k + 1 == steps.size()) worst = std::max(worst, residual);
        }
        dephased_gap = std::max(dephased_gap, std::abs(dephased_derivative_form(rho, h) - analytic));
      }
    }
    suite.add("fd_matches_analytic_derivative", 1e-6, worst, n);
    suite.add("fd_residual_loglog_slope", 0.1, std::abs(loglog_slope(steps, mean_residual) - 2.0), n);
    suite.add("dephased_derivative_form", 1e-10, dephased_gap, n);
  }

  // entropy is constant under unitary flow
  {
    Rng rng = make_rng(options.seed, 6);
    double rhs = 0.0;
    double drift = 0.0;
    long n = 0;
    const std::vector<double> grid = linear_grid(0.0, 5.0, 100);
    for (std::size_t d = 2; d <= 4; ++d) {
      for (int s = 0; s < 10; ++s, ++n) {
        const DensityMatrix rho = random_density(d, rng);
        const HermitianMatrix h = random_hermitian(d, rng);
        rhs = std::max(rhs, std::abs(entropy_derivative_check(rho, h, 1e-3).rhs));
        const Trajectory traj = trajectory(rho, h, grid);
        const auto [lo, hi] = std::minmax_element(traj.entropy.begin(), traj.entropy.end());
        drift = std::max(drift, *hi - *lo);
      }
    }
    suite.add("entropy_derivative_rhs_zero", 1e-10, rhs, n);
    suite.add("trajectory_entropy_constant", 1e-9, drift, n);
  }

  // the capacity bound is attained for d = 2..6 ...
  for (std::size_t d = 2; d <= 6; ++d) {
    const BoundEqualityReport equality = bound_equality_check(d, m_of);
    suite.add("capacity_bound_attained_d" + std::to_string(d), 1e-8, equality.gap, 1);
  }

  // ... and never exceeded
  {
    Rng rng = make_rng(options.seed, 7);
    double excess = -1.0;
    long n = 0;
    for (std::size_t d = 2; d <= 4; ++d) {
      const double bound = max_surprisal_variance(d).capacity_bound;
      for (int s = 0; s < bound_samples; ++s, ++n) {
        const HermitianMatrix h = random_unit_hermitian(d, rng);
        const DensityMatrix rho = random_density(d, rng, 1 + static_cast<std::size_t>(s) % d);
        excess = std::max(excess, hs_inner(h.matrix(), m_of(rho).matrix()).real() - bound);
      }
    }
    suite.add("capacity_bound_not_exceeded", 1e-9, std::max(excess, 0.0), n);
  }

  // qubit closed form vs numerical ascent
  {
    Rng rng = make_rng(options.seed, 8);
    SolverConfig cfg;
    cfg.seed = options.seed;
    cfg.restarts = 8;
    double worst = 0.0;
    for (int s = 0; s < qubit_samples; ++s) {
      const HermitianMatrix h = random_hermitian(2, rng);
      double numeric = 0.0;
      try {
        numeric = capacity_numeric(h, cfg).value;
      } catch (const NoConvergenceError& e) {
        numeric = e.result().value;
      }
      worst = std::max(worst, std::abs(numeric - capacity_qubit(h).value));
    }
    suite.add("qubit_cross_method", 1e-6, worst, qubit_samples);
  }

  if (full) {
    for (const auto& [d, resolution] : {std::pair<std::size_t, int>{2, 400}, {3, 150}}) {
      const SimplexGridResult grid = simplex_grid_oracle(d, resolution);
      const double f_max = max_surprisal_variance(d).f_max;
      const std::string tag = "_d" + std::to_string(d);
      suite.add("simplex_grid_not_above_family" + tag, 1e-12, std::max(grid.f_best - f_max, 0.0),
                static_cast<long>(grid.points));
      suite.add("simplex_grid_within_spacing" + tag, simplex_grid_tolerance(d, resolution),
                std::max(f_max - grid.f_best, 0.0), static_cast<long>(grid.points));
    }
  }
  return report;
}

}  // namespace cohgen
