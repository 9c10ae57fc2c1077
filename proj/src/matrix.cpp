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

#include "cohgen/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace cohgen {

namespace {

std::string describe(const char* what, double magnitude) {
  std::ostringstream os;
  os.precision(6);
  os << what << " (worst offending magnitude " << magnitude << ")";
  return os.str();
}

}  // namespace

void require_square_finite(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::NotSquare,
                "matrix must be square and non-empty, got " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
        throw Error(ErrorCode::NotFinite, "matrix entries must be finite");
      }
    }
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                    " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

HermitianMatrix HermitianMatrix::from(const ComplexMatrix& m) {
  require_square_finite(m);
  const double residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (residual > tolerance::kHermitian) {
    throw Error(ErrorCode::NotHermitian, describe("matrix is not Hermitian", residual), residual);
  }
  return HermitianMatrix(0.5 * (m + m.adjoint()));
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianMatrix(ComplexMatrix::Zero(n, n));
}

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return HermitianMatrix(ComplexMatrix::Identity(n, n));
}

HermitianMatrix HermitianMatrix::scaled(double c) const { return HermitianMatrix(c * m_); }

DensityMatrix DensityMatrix::from(const ComplexMatrix& m) { return from(HermitianMatrix::from(m)); }

DensityMatrix DensityMatrix::from(const HermitianMatrix& h) {
  const ComplexMatrix& m = h.matrix();
  const double trace_residual = std::abs(m.trace().real() - 1.0);
  if (trace_residual > tolerance::kTrace) {
    throw Error(ErrorCode::NotUnitTrace, describe("trace is not 1", trace_residual), trace_residual);
  }
  const double min_eig = eig_hermitian(h).values(0);
  if (min_eig < -tolerance::kPsd) {
    throw Error(ErrorCode::NotPSD, describe("matrix has a negative eigenvalue", min_eig), min_eig);
  }
  const Eigen::Index n = m.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double excess = std::norm(m(i, j)) - m(i, i).real() * m(j, j).real();
      if (excess > tolerance::kPsd) {
        throw Error(ErrorCode::NotPSD,
                    describe("|rho_ij|^2 exceeds rho_ii rho_jj", excess), excess);
      }
    }
  }
  return DensityMatrix(h);
}

RealVector DensityMatrix::diagonal() const { return matrix().diagonal().real(); }

PureState PureState::from(const ComplexVector& amplitudes) {
  if (amplitudes.size() == 0) {
    throw Error(ErrorCode::InvalidArgument, "state vector must be non-empty");
  }
  if (!amplitudes.allFinite()) {
    throw Error(ErrorCode::NotFinite, "state amplitudes must be finite");
  }
  const double residual = std::abs(amplitudes.squaredNorm() - 1.0);
  if (residual > tolerance::kNorm) {
    throw Error(ErrorCode::NotNormalized, describe("state is not normalized", residual), residual);
  }
  return PureState(amplitudes);
}

DensityMatrix PureState::density() const {
  return DensityMatrix::from(ComplexMatrix(amps_ * amps_.adjoint()));
}

DensityMatrix validate_density(const ComplexMatrix& m) { return DensityMatrix::from(m); }

EigenSystem eig_hermitian(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::ConvergenceFailure, "Hermitian eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix unitary_exp(const HermitianMatrix& h, double t) { return Propagator(h).at(t); }

Propagator::Propagator(const HermitianMatrix& h) : eig_(eig_hermitian(h)) {}

ComplexMatrix Propagator::at(double t) const {
  const Eigen::Index n = eig_.values.size();
  ComplexVector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -eig_.values(k) * t);
  }
  return eig_.vectors * phases.asDiagonal() * eig_.vectors.adjoint();
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  // Tr[a^dagger b] = sum_ij conj(a_ij) b_ij
  return a.conjugate().cwiseProduct(b).sum();
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

ComplexMatrix log2_positive(const HermitianMatrix& h, double min_eigenvalue) {
  const EigenSystem es = eig_hermitian(h);
  if (es.values(0) < min_eigenvalue) {
    throw Error(ErrorCode::SingularState,
                describe("matrix is too close to singular for a logarithm", es.values(0)),
                es.values(0));
  }
  RealVector logs = es.values.array().log() / std::log(2.0);
  return es.vectors * logs.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

RealVector clamped_spectrum(const DensityMatrix& rho) {
  RealVector values = eig_hermitian(rho.hermitian()).values;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) < 0.0) values(k) = 0.0;
  }
  return values;
}

}  // namespace cohgen
