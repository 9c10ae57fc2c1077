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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "cohgen/error.hpp"

namespace cohgen {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-12;
inline constexpr double kNorm = 1e-12;
}  // namespace tolerance

/// Throws NotSquare / NotFinite.
void require_square_finite(const ComplexMatrix& m);

/// Throws DimensionMismatch unless both matrices are d x d with the same d.
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);

/// A square, finite matrix equal to its adjoint within tolerance::kHermitian
/// per entry. Stored symmetrized as (m + m^dagger) / 2.
class HermitianMatrix {
 public:
  static HermitianMatrix from(const ComplexMatrix& m);
  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  HermitianMatrix scaled(double c) const;

 private:
  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Hermitian, unit trace, positive semidefinite (eigenvalues >= -1e-12)
/// and Cauchy-Schwarz on entries: rho_ii rho_jj >= |rho_ij|^2 - 1e-12.
class DensityMatrix {
 public:
  static DensityMatrix from(const ComplexMatrix& m);
  static DensityMatrix from(const HermitianMatrix& h);

  std::size_t dim() const { return h_.dim(); }
  const HermitianMatrix& hermitian() const { return h_; }
  const ComplexMatrix& matrix() const { return h_.matrix(); }
  Complex operator()(std::size_t i, std::size_t j) const { return h_(i, j); }

  /// Real diagonal rho_ii.
  RealVector diagonal() const;

 private:
  explicit DensityMatrix(HermitianMatrix h) : h_(std::move(h)) {}
  HermitianMatrix h_;
};

/// Unit-norm state vector.
class PureState {
 public:
  static PureState from(const ComplexVector& amplitudes);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }

  /// |psi><psi|
  DensityMatrix density() const;

 private:
  explicit PureState(ComplexVector a) : amps_(std::move(a)) {}
  ComplexVector amps_;
};

/// Validates a candidate density matrix; entries are kept verbatim apart
/// from Hermitian symmetrization.
DensityMatrix validate_density(const ComplexMatrix& m);

struct EigenSystem {
  RealVector values;     // ascending
  ComplexMatrix vectors; // columns are eigenvectors
};

EigenSystem eig_hermitian(const HermitianMatrix& h);

/// exp(-i t H).
ComplexMatrix unitary_exp(const HermitianMatrix& h, double t);

/// Reuses one eigendecomposition of H for many evolution times.
class Propagator {
 public:
  explicit Propagator(const HermitianMatrix& h);

  std::size_t dim() const { return static_cast<std::size_t>(eig_.values.size()); }
  ComplexMatrix at(double t) const;

 private:
  EigenSystem eig_;
};

/// sqrt(Tr[m^dagger m]).
double hs_norm(const ComplexMatrix& m);

/// Tr[a^dagger b].
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// a b - b a
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix base-2 logarithm of a positive definite matrix through its
/// eigendecomposition. Throws SingularState if an eigenvalue is below
/// `min_eigenvalue`.
ComplexMatrix log2_positive(const HermitianMatrix& h, double min_eigenvalue);

/// Eigenvalues clamped to zero on [-kPsd, 0].
RealVector clamped_spectrum(const DensityMatrix& rho);

}  // namespace cohgen
