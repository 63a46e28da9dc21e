// Copyright 2026 The tracebound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRACEBOUND_STATES_HPP
#define TRACEBOUND_STATES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tracebound {

using Complex = std::complex<double>;
/// Dense column-major d x d complex matrix.
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Relative eigenvalue cutoff used for numerical ranks unless overridden.
inline constexpr double kDefaultRankTol = 1e-10;
/// Relative Hermiticity tolerance (against the largest entry).
inline constexpr double kHermitianTol = 1e-10;
/// Absolute tolerance on |Tr(rho) - 1|.
inline constexpr double kTraceTol = 1e-10;
/// Per-dimension relative tolerance for roundoff-negative eigenvalues.
inline constexpr double kNegativeEigTol = 1e-12;

/// Thrown whenever an input violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Full spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted in decreasing order and column j of `eigenvectors`
/// belongs to `eigenvalues[j]`.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  double max_eigenvalue() const { return eigenvalues.size() ? eigenvalues(0) : 0.0; }
  double min_eigenvalue() const {
    return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) : 0.0;
  }
  /// U diag(lambda) U^dagger.
  ComplexMatrix reconstruct() const;
};

/// Largest |M_ij - conj(M_ji)|.
double hermitian_deviation(const ComplexMatrix& m);

/// Diagonalizes a Hermitian matrix. Throws ValidationError when the
/// anti-Hermitian part exceeds kHermitianTol times the largest entry.
Spectrum hermitian_eig(const ComplexMatrix& m);

/// Number of eigenvalues strictly above tol * lambda_1. Zero only when
/// lambda_1 <= 0 (the zero matrix, for PSD inputs).
int numerical_rank(const Spectrum& s, double tol = kDefaultRankTol);

/// A validated quantum state: Hermitian, positive semidefinite, unit trace.
///
/// Validation and diagonalization happen once, in the constructor; the object
/// is immutable afterwards and safe to share between threads. Eigenvalues in
/// [-d * 1e-12 * lambda_max, 0) are stored clamped to zero.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m, double rank_tol = kDefaultRankTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  const Spectrum& spectrum() const { return spectrum_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }
  double rank_tolerance() const { return rank_tol_; }

  /// numerical_rank at this state's rank tolerance.
  int rank() const { return numerical_rank(spectrum_, rank_tol_); }
  int rank(double tol) const { return numerical_rank(spectrum_, tol); }

 private:
  ComplexMatrix matrix_;
  Spectrum spectrum_;
  double rank_tol_;
};

/// Tr(rho^2), via the squared Frobenius norm.
double purity(const DensityMatrix& rho);

/// S_L(rho) = 1 - Tr(rho^2).
double linear_entropy(const DensityMatrix& rho);

/// Pi / r, where Pi projects onto basis vectors [offset, offset + r).
DensityMatrix projector_state(int dim, int rank, int offset = 0);

/// Diagonal state with the given (nonnegative, unit-sum) populations.
DensityMatrix diagonal_state(const RealVector& populations);

/// U diag(lambda) U^dagger for a unitary U.
DensityMatrix conjugated_state(const RealVector& eigenvalues, const ComplexMatrix& unitary);

}  // namespace tracebound

#endif  // TRACEBOUND_STATES_HPP
