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

#include "cohgen/matrix.hpp"

namespace cohgen {

/// Diagonal entries below this are treated as exactly zero wherever their
/// logarithm would appear. PSD forces the paired off-diagonals to vanish.
inline constexpr double kZeroDiagonal = 1e-14;

/// Inputs whose smallest diagonal entry is below this are flagged as
/// boundary states in DerivativeReport.
inline constexpr double kBoundaryDiagonal = 1e-10;

/// Point of the probability simplex. Entries in [-1e-12, 0) are clamped to 0.
class ProbabilityVector {
 public:
  static ProbabilityVector from(const RealVector& probs);
  static ProbabilityVector uniform(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(p_.size()); }
  const RealVector& probs() const { return p_; }
  double operator[](std::size_t i) const { return p_(static_cast<Eigen::Index>(i)); }

 private:
  explicit ProbabilityVector(RealVector p) : p_(std::move(p)) {}
  RealVector p_;
};

ProbabilityVector diagonal_distribution(const DensityMatrix& rho);

DensityMatrix dephase(const DensityMatrix& rho);

/// Shannon entropy in bits, 0 log 0 = 0.
double shannon_entropy(const ProbabilityVector& p);

/// -Tr[rho log2 rho] in bits over the clamped spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

/// C_r(rho) = S(Delta[rho]) - S(rho) in bits. S(Delta[rho]) is taken from
/// the diagonal directly.
double rel_entropy_coherence(const DensityMatrix& rho);

/// M = i [rho, log2 Delta(rho)], i.e. M_ij = i rho_ij (log2 rho_jj - log2 rho_ii).
HermitianMatrix commutator_M(const DensityMatrix& rho);

struct DerivativeReport {
  double analytic;  // bits per unit time, signed
  DensityMatrix state;
  HermitianMatrix hamiltonian;
  double min_diag;
  /// min_diag < kBoundaryDiagonal: the logarithms behind the formula do not
  /// all exist and the zero-diagonal convention was applied.
  bool boundary_state;
};

/// dC_r(rho_t)/dt at t = 0 for rho_t = e^{-iHt} rho e^{iHt}:
/// i Tr(H [rho, log2 Delta(rho)]) = Tr(H M).
DerivativeReport coherence_derivative(const HermitianMatrix& h, const DensityMatrix& rho);

/// Variance of the surprisal -log2 p_i under p, in bits^2.
double surprisal_variance(const ProbabilityVector& p);

/// 1/2 sum_ij rho_ii rho_jj (log2 rho_jj - log2 rho_ii)^2.
double surprisal_variance_pairform(const DensityMatrix& rho);

}  // namespace cohgen
