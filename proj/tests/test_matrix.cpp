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

#include "cohgen/matrix.hpp"
#include "cohgen/sampling.hpp"
#include "test_util.hpp"

using namespace cohgen;
using namespace cohgen::testing;

TEST_CASE("validate_density accepts projectors") {
  CHECK_NOTHROW(validate_density(diag2(1.0, 0.0)));
  const DensityMatrix plus = validate_density(mat2(0.5, 0.5, 0.5, 0.5));
  CHECK(plus.matrix()(0, 1) == Complex(0.5, 0.0));
}

TEST_CASE("validate_density keeps entries verbatim") {
  Rng rng = make_rng(11);
  const DensityMatrix rho = random_density(4, rng);
  const DensityMatrix again = validate_density(rho.matrix());
  CHECK(again.matrix() == rho.matrix());
}

TEST_CASE("validate_density rejects violations with the offending magnitude") {
  SUBCASE("not PSD") {
    try {
      validate_density(mat2(0.6, 0.6, 0.6, 0.4));
      FAIL("expected NotPSD");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPSD);
      // lambda_min = 0.5 - sqrt(0.01 + 0.36)
      CHECK(e.magnitude() == doctest::Approx(0.5 - std::sqrt(0.37)));
    }
  }
  SUBCASE("not unit trace") {
    try {
      validate_density(diag2(0.5, 0.6));
      FAIL("expected NotUnitTrace");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotUnitTrace);
      CHECK(e.magnitude() == doctest::Approx(0.1));
    }
  }
  SUBCASE("not Hermitian") {
    try {
      validate_density(mat2(0.5, 0.1, 0.2, 0.5));
      FAIL("expected NotHermitian");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotHermitian);
      CHECK(e.magnitude() == doctest::Approx(0.1));
    }
  }
  SUBCASE("negative eigenvalue with a diagonal input") {
    try {
      validate_density(diag2(1.5, -0.5));
      FAIL("expected NotPSD");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPSD);
      CHECK(e.magnitude() == doctest::Approx(-0.5));
    }
  }
  SUBCASE("non-square and non-finite") {
    CHECK_THROWS_AS(validate_density(ComplexMatrix::Zero(2, 3)), Error);
    ComplexMatrix m = diag2(1.0, 0.0);
    m(1, 1) = std::nan("");
    try {
      validate_density(m);
      FAIL("expected NotFinite");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotFinite);
    }
  }
}

TEST_CASE("Hermitian input within tolerance is symmetrized") {
  ComplexMatrix m = sigma_x();
  m(0, 1) += 1e-13;
  const HermitianMatrix h = HermitianMatrix::from(m);
  CHECK(h(0, 1) == std::conj(h(1, 0)));
}

TEST_CASE("PureState requires unit norm") {
  ComplexVector v(2);
  v << 1.0, 1.0;
  CHECK_THROWS_AS(PureState::from(v), Error);
  v.normalize();
  CHECK(PureState::from(v).density().matrix()(0, 1).real() == doctest::Approx(0.5));
}

TEST_CASE("eig_hermitian examples") {
  SUBCASE("identity") {
    const EigenSystem es = eig_hermitian(HermitianMatrix::identity(2));
    CHECK(es.values(0) == doctest::Approx(1.0));
    CHECK(es.values(1) == doctest::Approx(1.0));
    CHECK(max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::Identity(2, 2)) < 1e-12);
  }
  SUBCASE("diagonal") {
    const EigenSystem es = eig_hermitian(HermitianMatrix::from(diag2(0.7, 0.3)));
    CHECK(es.values(0) == doctest::Approx(0.3));
    CHECK(es.values(1) == doctest::Approx(0.7));
    CHECK(std::abs(es.vectors(1, 0)) == doctest::Approx(1.0));
  }
  SUBCASE("sigma_y has eigenvalues -1, 1") {
    const EigenSystem es = eig_hermitian(HermitianMatrix::from(sigma_y()));
    CHECK(es.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(es.values(1) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("eig_hermitian residual and orthonormality on random input") {
  Rng rng = make_rng(3);
  for (std::size_t d = 1; d <= 8; ++d) {
    for (int s = 0; s < 20; ++s) {
      const HermitianMatrix h = random_hermitian(d, rng);
      const EigenSystem es = eig_hermitian(h);
      const ComplexMatrix& v = es.vectors;
      const ComplexMatrix lam = es.values.cast<Complex>().asDiagonal();
      CHECK(hs_norm(h.matrix() * v - v * lam) <= 1e-10 * hs_norm(h.matrix()));
      CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::Identity(v.rows(), v.cols())) <= 1e-10);
      CHECK(max_abs_diff(v * lam * v.adjoint(), h.matrix()) <= 1e-9);
      for (Eigen::Index k = 1; k < es.values.size(); ++k) CHECK(es.values(k - 1) <= es.values(k));
    }
  }
}

TEST_CASE("unitary_exp examples") {
  Rng rng = make_rng(5);
  const HermitianMatrix h = random_hermitian(3, rng);
  CHECK(max_abs_diff(unitary_exp(h, 0.0), ComplexMatrix::Identity(3, 3)) < 1e-14);

  const ComplexMatrix u = unitary_exp(HermitianMatrix::from(diag2(0.4, -1.3)), 2.5);
  CHECK(std::abs(u(0, 0) - std::polar(1.0, -0.4 * 2.5)) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, 1.3 * 2.5)) < 1e-14);
  CHECK(std::abs(u(0, 1)) < 1e-14);

  // exp(-i t sigma_y) = cos t I - i sin t sigma_y
  const double t = std::numbers::pi / 2.0;
  const ComplexMatrix expected =
      std::cos(t) * ComplexMatrix::Identity(2, 2) - I * std::sin(t) * sigma_y();
  CHECK(max_abs_diff(unitary_exp(HermitianMatrix::from(sigma_y()), t), expected) < 1e-14);
}

TEST_CASE("unitary_exp group and unitarity properties") {
  Rng rng = make_rng(6);
  std::uniform_real_distribution<double> time(-10.0, 10.0);
  for (int s = 0; s < 200; ++s) {
    const std::size_t d = 2 + static_cast<std::size_t>(s) % 5;
    const HermitianMatrix h = random_hermitian(d, rng);
    const double t = time(rng);
    const ComplexMatrix u = unitary_exp(h, t);
    const auto n = static_cast<Eigen::Index>(d);
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::Identity(n, n)) <= 1e-10);
    CHECK(max_abs_diff(u * unitary_exp(h, -t), ComplexMatrix::Identity(n, n)) <= 1e-9);
  }
}

TEST_CASE("hs_norm examples") {
  CHECK(hs_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
  CHECK(hs_norm(ComplexMatrix::Identity(5, 5)) == doctest::Approx(std::sqrt(5.0)));
  const ComplexMatrix h = I / std::sqrt(2.0) * mat2(0.0, 1.0, -1.0, 0.0);
  CHECK(hs_norm(h) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("hs_inner examples") {
  CHECK(hs_inner(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) == Complex(2.0, 0.0));
  CHECK(std::abs(hs_inner(sigma_x(), sigma_y())) == 0.0);
  CHECK(hs_inner(sigma_y(), sigma_y()) == Complex(2.0, 0.0));
  CHECK_THROWS_AS(hs_inner(sigma_x(), ComplexMatrix::Identity(3, 3)), Error);
}

TEST_CASE("hs_inner is real on Hermitian pairs and obeys Cauchy-Schwarz") {
  Rng rng = make_rng(7);
  for (int s = 0; s < 300; ++s) {
    const std::size_t d = 1 + static_cast<std::size_t>(s) % 6;
    const auto n = static_cast<Eigen::Index>(d);
    const HermitianMatrix a = random_hermitian(d, rng);
    const HermitianMatrix b = random_hermitian(d, rng);
    CHECK(std::abs(hs_inner(a.matrix(), b.matrix()).imag()) <= 1e-12 * (1.0 + hs_norm(a.matrix()) * hs_norm(b.matrix())));
    const ComplexMatrix x = random_ginibre(n, n, rng);
    const ComplexMatrix y = random_ginibre(n, n, rng);
    CHECK(std::abs(hs_inner(x, y)) <= hs_norm(x) * hs_norm(y) * (1.0 + 1e-12));
  }
}

TEST_CASE("hs_norm is unitarily invariant") {
  Rng rng = make_rng(8);
  for (int s = 0; s < 100; ++s) {
    const std::size_t d = 2 + static_cast<std::size_t>(s) % 5;
    const auto n = static_cast<Eigen::Index>(d);
    const ComplexMatrix a = random_ginibre(n, n, rng);
    const ComplexMatrix u = random_unitary(d, rng);
    CHECK(hs_norm(u * a * u.adjoint()) == doctest::Approx(hs_norm(a)).epsilon(1e-12));
  }
}

TEST_CASE("log2_positive rejects near-singular input") {
  CHECK_THROWS_AS(log2_positive(HermitianMatrix::from(diag2(1.0, 0.0)), 1e-10), Error);
  const ComplexMatrix l = log2_positive(HermitianMatrix::from(diag2(0.5, 0.25)), 1e-10);
  CHECK(l(0, 0).real() == doctest::Approx(-1.0));
  CHECK(l(1, 1).real() == doctest::Approx(-2.0));
}
