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

#include "tracebound/states.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace tracebound {

ComplexMatrix Spectrum::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

double hermitian_deviation(const ComplexMatrix& m) {
  double dev = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      dev = std::max(dev, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return dev;
}

Spectrum hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ValidationError(fmt::format("hermitian_eig: expected a nonempty square matrix, got {}x{}",
                                      m.rows(), m.cols()));
  }
  const double scale = m.cwiseAbs().maxCoeff();
  const double dev = hermitian_deviation(m);
  if (dev > kHermitianTol * scale) {
    throw ValidationError(
        fmt::format("hermitian_eig: matrix is not Hermitian (max deviation {:.3e}, largest entry {:.3e})",
                    dev, scale));
  }

  // Eigen reads only the lower triangle; feed it the Hermitian part.
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }

  // Eigen returns ascending order.
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

int numerical_rank(const Spectrum& s, double tol) {
  const double top = s.max_eigenvalue();
  if (!(top > 0.0)) return 0;
  const double cutoff = tol * top;
  int rank = 0;
  for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j) {
    if (s.eigenvalues(j) > cutoff) ++rank;
  }
  return rank;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double rank_tol) : rank_tol_(rank_tol) {
  if (!(rank_tol >= 0.0)) {
    throw ValidationError(fmt::format("DensityMatrix: rank tolerance must be nonnegative, got {}", rank_tol));
  }
  spectrum_ = hermitian_eig(m);
  matrix_ = 0.5 * (m + m.adjoint());

  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    throw ValidationError(fmt::format("DensityMatrix: trace is {:.17g}, expected 1", trace));
  }

  const int d = dim();
  const double floor = -d * kNegativeEigTol * std::max(spectrum_.max_eigenvalue(), 0.0);
  for (Eigen::Index j = 0; j < spectrum_.eigenvalues.size(); ++j) {
    double& lambda = spectrum_.eigenvalues(j);
    if (lambda < floor) {
      throw ValidationError(
          fmt::format("DensityMatrix: eigenvalue {:.3e} is negative beyond roundoff (floor {:.3e})", lambda,
                      floor));
    }
    if (lambda < 0.0) lambda = 0.0;
  }
}

double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

DensityMatrix projector_state(int dim, int rank, int offset) {
  if (dim < 1 || rank < 1 || offset < 0 || offset + rank > dim) {
    throw ValidationError(
        fmt::format("projector_state: need 1 <= rank and 0 <= offset with offset + rank <= dim "
                    "(dim={}, rank={}, offset={})",
                    dim, rank, offset));
  }
  RealVector pop = RealVector::Zero(dim);
  pop.segment(offset, rank).setConstant(1.0 / rank);
  return diagonal_state(pop);
}

DensityMatrix diagonal_state(const RealVector& populations) {
  return DensityMatrix(populations.cast<Complex>().asDiagonal());
}

DensityMatrix conjugated_state(const RealVector& eigenvalues, const ComplexMatrix& unitary) {
  if (unitary.rows() != eigenvalues.size() || unitary.cols() != eigenvalues.size()) {
    throw ValidationError("conjugated_state: unitary and eigenvalue list disagree on dimension");
  }
  return DensityMatrix(unitary * eigenvalues.cast<Complex>().asDiagonal() * unitary.adjoint());
}

}  // namespace tracebound
