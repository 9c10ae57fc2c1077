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

#include <cstdint>
#include <random>

#include "cohgen/matrix.hpp"

namespace cohgen {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream) pairs, e.g. one per solver restart.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix random_ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// GUE-distributed Hermitian matrix.
HermitianMatrix random_hermitian(std::size_t dim, Rng& rng);

/// Random Hermitian matrix with Hilbert-Schmidt norm 1.
HermitianMatrix random_unit_hermitian(std::size_t dim, Rng& rng);

/// A A^dagger / Tr[A A^dagger] with A a dim x rank Ginibre matrix.
/// rank == dim gives full rank with probability one.
DensityMatrix random_density(std::size_t dim, Rng& rng, std::size_t rank);
DensityMatrix random_density(std::size_t dim, Rng& rng);

PureState random_pure(std::size_t dim, Rng& rng);

/// Haar-random unitary.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

}  // namespace cohgen
