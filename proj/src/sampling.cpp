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

#include "cohgen/sampling.hpp"

#include <cmath>

namespace cohgen {

namespace {

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(mix(seed)), static_cast<std::uint32_t>(mix(seed) >> 32),
                    static_cast<std::uint32_t>(mix(stream ^ 0x5bd1e995ULL)),
                    static_cast<std::uint32_t>(mix(stream ^ 0x5bd1e995ULL) >> 32)};
  return Rng(seq);
}

ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix a(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

HermitianMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  const ComplexMatrix a = random_ginibre(n, n, rng);
  return HermitianMatrix::from(ComplexMatrix(0.5 * (a + a.adjoint())));
}

HermitianMatrix random_unit_hermitian(std::size_t dim, Rng& rng) {
  const HermitianMatrix h = random_hermitian(dim, rng);
  return h.scaled(1.0 / hs_norm(h.matrix()));
}

DensityMatrix random_density(std::size_t dim, Rng& rng, std::size_t rank) {
  const ComplexMatrix a =
      random_ginibre(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(rank), rng);
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from(ComplexMatrix(0.5 * (rho + rho.adjoint())));
}

DensityMatrix random_density(std::size_t dim, Rng& rng) { return random_density(dim, rng, dim); }

PureState random_pure(std::size_t dim, Rng& rng) {
  ComplexVector v = random_ginibre(static_cast<Eigen::Index>(dim), 1, rng).col(0);
  v.normalize();
  return PureState::from(v);
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(random_ginibre(n, n, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

}  // namespace cohgen
