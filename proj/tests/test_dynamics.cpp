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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "cohgen/capacity.hpp"
#include "cohgen/dynamics.hpp"
#include "cohgen/sampling.hpp"
#include "test_util.hpp"

using namespace cohgen;
using namespace cohgen::testing;

namespace {
constexpr double kDeriv083 = 1.35217998036604;  // mpmath, |Tr(H M)| at q0 = 0.083
}  // namespace

TEST_CASE("evolve examples") {
  const DensityMatrix rho = pure_qubit(0.3, 0.7);
  const HermitianMatrix h = HermitianMatrix::from(sigma_x() + 0.4 * sigma_z());
  CHECK(max_abs_diff(evolve(rho, h, 0.0).matrix(), rho.matrix()) <= 1e-15);

  const DensityMatrix mixed = validate_density(diag2(0.2, 0.8));
  const HermitianMatrix diag_h = HermitianMatrix::from(diag2(1.3, -0.4));
  for (double t : {0.5, 3.0, -11.0}) {
    CHECK(max_abs_diff(evolve(mixed, diag_h, t).matrix(), mixed.matrix()) <= 1e-15);
  }

  const DensityMatrix up = validate_density(diag2(1.0, 0.0));
  const HermitianMatrix rot = HermitianMatrix::from(-sigma_y() / std::sqrt(2.0));
  for (double t : {1e-3, 0.05, 0.3, 1.0}) {
    const double expected = std::pow(std::cos(t / std::sqrt(2.0)), 2);
    CHECK(std::abs(evolve(up, rot, t)(0, 0).real() - expected) <= 1e-14);
  }

  CHECK_THROWS_AS(evolve(rho, HermitianMatrix::identity(3), 1.0), Error);
}

TEST_CASE("evolve group property") {
  Rng rng = make_rng(51);
  std::uniform_real_distribution<double> time(-3.0, 3.0);
  for (int s = 0; s < 200; ++s) {
    const std::size_t d = 2 + static_cast<std::size_t>(s) % 4;
    const DensityMatrix rho = random_density(d, rng);
    const HermitianMatrix h = random_hermitian(d, rng);
    const double t1 = time(rng);
    const double t2 = time(rng);
    const ComplexMatrix twice = evolve(evolve(rho, h, t1), h, t2).matrix();
    CHECK(max_abs_diff(twice, evolve(rho, h, t1 + t2).matrix()) <= 1e-9);
  }
}

TEST_CASE("trajectory examples") {
  const DensityMatrix rho = pure_qubit(0.3, 0.2);
  const HermitianMatrix h = HermitianMatrix::from(sigma_x());

  SUBCASE("single sample") {
    const Trajectory traj = trajectory(rho, h, {0.0});
    REQUIRE(traj.states.size() == 1);
    CHECK(max_abs_diff(traj.states[0].matrix(), rho.matrix()) <= 1e-15);
    CHECK(traj.coherence[0] == doctest::Approx(rel_entropy_coherence(rho)).epsilon(1e-14));
    CHECK(std::abs(traj.entropy[0]) <= 1e-12);
  }
  SUBCASE("coherence grows from an incoherent state") {
    const DensityMatrix up = validate_density(diag2(1.0, 0.0));
    const Trajectory traj = trajectory(up, optimal_hamiltonian(2), linear_grid(0.0, 0.2, 21));
    CHECK(traj.coherence[0] == doctest::Approx(0.0).epsilon(1e-15));
    for (std::size_t k = 1; k < traj.coherence.size(); ++k) {
      CHECK(traj.coherence[k] > traj.coherence[k - 1]);
    }
  }
  SUBCASE("matches evolve sample by sample") {
    const std::vector<double> grid = linear_grid(-1.0, 2.0, 13);
    const Trajectory traj = trajectory(rho, h, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(max_abs_diff(traj.states[k].matrix(), evolve(rho, h, grid[k]).matrix()) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(trajectory(rho, h, {}), Error);
  CHECK_THROWS_AS(trajectory(rho, h, {0.0, 1.0, 0.5}), Error);
}

TEST_CASE("trajectory entropy is constant and coherence stays in range") {
  Rng rng = make_rng(52);
  for (int s = 0; s < 40; ++s) {
    const std::size_t d = 2 + static_cast<std::size_t>(s) % 5;
    const DensityMatrix rho = random_density(d, rng, 1 + static_cast<std::size_t>(s) % d);
    const HermitianMatrix h = random_hermitian(d, rng);
    const Trajectory traj = trajectory(rho, h, linear_grid(0.0, 5.0, 100));
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
      CHECK(std::abs(traj.entropy[k] - traj.entropy[0]) <= 1e-9);
      CHECK(traj.coherence[k] >= 0.0);
      CHECK(traj.coherence[k] <= std::log2(static_cast<double>(d)) + 1e-12);
    }
  }
}

TEST_CASE("write_trajectory_csv") {
  const Trajectory traj = trajectory(validate_density(diag2(1.0, 0.0)),
                                     HermitianMatrix::from(sigma_x()), {0.0, 0.1});
  std::ostringstream out;
  write_trajectory_csv(out, traj);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,coherence_bits,entropy_bits");
  std::getline(lines, line);
  CHECK(line.rfind("0.0,", 0) == 0);
  std::getline(lines, line);
  // 17 significant digits round-trip the coherence value
  const auto first = line.find(',');
  const auto second = line.find(',', first + 1);
  CHECK(std::stod(line.substr(first + 1, second - first - 1)) == traj.coherence[1]);
  CHECK_FALSE(std::getline(lines, line));
}

TEST_CASE("fd_derivative examples") {
  const HermitianMatrix h = HermitianMatrix::from(sigma_y() / std::sqrt(2.0));
  const DensityMatrix rho = pure_qubit(0.083);
  const double fd = fd_derivative(rho, h, 1e-4);
  CHECK(std::abs(std::abs(fd) - kDeriv083) <= 1e-6);
  CHECK(std::abs(fd - coherence_derivative(h, rho).analytic) <= 1e-6);

  const DensityMatrix plus = pure_qubit(0.5);
  Rng rng = make_rng(53);
  for (int s = 0; s < 20; ++s) {
    CHECK(std::abs(fd_derivative(plus, random_hermitian(2, rng), 1e-4)) <= 1e-6);
  }

  const DensityMatrix diag = validate_density(diag2(0.3, 0.7));
  CHECK(std::abs(fd_derivative(diag, HermitianMatrix::from(sigma_x()), 1e-3)) <= 1e-5);

  for (double bad : {0.0, -1e-3, 0.2}) CHECK_THROWS_AS(fd_derivative(rho, h, bad), Error);
}

TEST_CASE("finite differences converge quadratically to the analytic derivative") {
  Rng rng = make_rng(54);
  for (std::size_t d = 2; d <= 4; ++d) {
    for (int s = 0; s < 50; ++s) {
      const DensityMatrix rho = random_density(d, rng);
      const HermitianMatrix h = random_hermitian(d, rng);
      const double analytic = coherence_derivative(h, rho).analytic;
      const double err_coarse = std::abs(fd_derivative(rho, h, 1e-2) - analytic);
      // K fitted at the coarse step, then required at the finer ones
      const double k = 2.0 * err_coarse / 1e-4;
      for (double step : {1e-3, 1e-4}) {
        CHECK(std::abs(fd_derivative(rho, h, step) - analytic) <= k * step * step + 1e-9);
      }
      CHECK(std::abs(fd_derivative_richardson(rho, h, 1e-2) - analytic) <=
            std::max(err_coarse * 1e-2, 1e-9));
    }
  }
}

TEST_CASE("entropy_derivative_check") {
  Rng rng = make_rng(55);
  for (int s = 0; s < 200; ++s) {
    const std::size_t d = 2 + static_cast<std::size_t>(s) % 4;
    const DensityMatrix rho = random_density(d, rng);
    const EntropyDerivativeCheck c = entropy_derivative_check(rho, random_hermitian(d, rng), 1e-3);
    CHECK(std::abs(c.rhs) <= 1e-10);
    CHECK(std::abs(c.lhs) <= 1e-5);
  }
  const DensityMatrix mixed = validate_density(ComplexMatrix::Identity(2, 2) / 2.0);
  const EntropyDerivativeCheck c = entropy_derivative_check(mixed, HermitianMatrix::from(sigma_x()), 1e-3);
  CHECK(std::abs(c.lhs) <= 1e-12);

  try {
    entropy_derivative_check(pure_qubit(0.3), HermitianMatrix::from(sigma_x()), 1e-3);
    FAIL("expected SingularState");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularState);
  }
}

TEST_CASE("dephased derivative form equals the commutator form") {
  Rng rng = make_rng(56);
  for (int s = 0; s < 500; ++s) {
    const std::size_t d = 2 + static_cast<std::size_t>(s) % 5;
    const DensityMatrix rho = random_density(d, rng, 1 + static_cast<std::size_t>(s) % d);
    const HermitianMatrix h = random_hermitian(d, rng);
    CHECK(std::abs(dephased_derivative_form(rho, h) - coherence_derivative(h, rho).analytic) <= 1e-10);
  }
}

TEST_CASE("linear_grid") {
  CHECK(linear_grid(0.0, 1.0, 1) == std::vector<double>{0.0});
  const std::vector<double> g = linear_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[2] == doctest::Approx(0.5));
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), Error);
}
