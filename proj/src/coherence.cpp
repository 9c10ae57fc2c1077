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

#include "cohgen/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace cohgen {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

ProbabilityVector ProbabilityVector::from(const RealVector& probs) {
  if (probs.size() == 0) throw Error(ErrorCode::NotProbability, "empty probability vector");
  RealVector p = probs;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p(i)) || p(i) < -tolerance::kPsd || p(i) > 1.0 + tolerance::kPsd) {
      throw Error(ErrorCode::NotProbability, "probability outside [0, 1]", p(i));
    }
    p(i) = std::clamp(p(i), 0.0, 1.0);
  }
  const double residual = std::abs(p.sum() - 1.0);
  if (residual > tolerance::kTrace) {
    throw Error(ErrorCode::NotProbability, "probabilities do not sum to 1", residual);
  }
  return ProbabilityVector(std::move(p));
}

ProbabilityVector ProbabilityVector::uniform(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ProbabilityVector(RealVector::Constant(n, 1.0 / static_cast<double>(dim)));
}

ProbabilityVector diagonal_distribution(const DensityMatrix& rho) {
  return ProbabilityVector::from(rho.diagonal());
}

DensityMatrix dephase(const DensityMatrix& rho) {
  return DensityMatrix::from(ComplexMatrix(rho.matrix().diagonal().asDiagonal()));
}

double shannon_entropy(const ProbabilityVector& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.probs().size(); ++i) s -= xlog2x(p.probs()(i));
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector lambda = clamped_spectrum(rho);
  double s = 0.0;
  for (Eigen::Index k = 0; k < lambda.size(); ++k) s -= xlog2x(lambda(k));
  return std::max(s, 0.0);
}

double rel_entropy_coherence(const DensityMatrix& rho) {
  const double c = shannon_entropy(diagonal_distribution(rho)) - von_neumann_entropy(rho);
  // only rounding noise can push this below zero
  return c < 0.0 && c > -tolerance::kPsd ? 0.0 : c;
}

HermitianMatrix commutator_M(const DensityMatrix& rho) {
  const ComplexMatrix& r = rho.matrix();
  const Eigen::Index n = r.rows();
  RealVector logs(n);
  std::vector<bool> support(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = r(i, i).real();
    support[static_cast<std::size_t>(i)] = p >= kZeroDiagonal;
    logs(i) = support[static_cast<std::size_t>(i)] ? std::log2(p) : 0.0;
  }
  const Complex imag_unit(0.0, 1.0);
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!support[static_cast<std::size_t>(i)]) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || !support[static_cast<std::size_t>(j)]) continue;
      m(i, j) = imag_unit * r(i, j) * (logs(j) - logs(i));
    }
  }
  return HermitianMatrix::from(m);
}

DerivativeReport coherence_derivative(const HermitianMatrix& h, const DensityMatrix& rho) {
  require_same_dim(h.matrix(), rho.matrix());
  const HermitianMatrix m = commutator_M(rho);
  const Complex value = hs_inner(h.matrix(), m.matrix());
  const double scale = std::max(1.0, hs_norm(h.matrix()) * hs_norm(m.matrix()));
  if (std::abs(value.imag()) > 1e-10 * scale) {
    std::ostringstream os;
    os << "Tr(HM) has imaginary residue " << value.imag();
    throw Error(ErrorCode::NotHermitian, os.str(), value.imag());
  }
  const double min_diag = rho.diagonal().minCoeff();
  return {value.real(), rho, h, min_diag, min_diag < kBoundaryDiagonal};
}

double surprisal_variance(const ProbabilityVector& p) {
  double first = 0.0;
  double second = 0.0;
  for (Eigen::Index i = 0; i < p.probs().size(); ++i) {
    const double pi = p.probs()(i);
    if (pi <= 0.0) continue;
    const double s = -std::log2(pi);
    first += pi * s;
    second += pi * s * s;
  }
  return std::max(second - first * first, 0.0);
}

double surprisal_variance_pairform(const DensityMatrix& rho) {
  const RealVector d = rho.diagonal();
  const Eigen::Index n = d.size();
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i) < kZeroDiagonal) continue;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (d(j) < kZeroDiagonal) continue;
      const double gap = std::log2(d(j)) - std::log2(d(i));
      total += d(i) * d(j) * gap * gap;
    }
  }
  // the (i, j) and (j, i) terms are equal, so half the full sum is the i < j sum
  return total;
}

}  // namespace cohgen
