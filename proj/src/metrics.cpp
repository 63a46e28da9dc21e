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

#include "tracebound/metrics.hpp"

#include <vector>

#include <fmt/format.h>

namespace tracebound {

namespace {

void require_same_dim(const DensityMatrix& rho, const DensityMatrix& sigma, const char* who) {
  if (rho.dim() != sigma.dim()) {
    throw ValidationError(fmt::format("{}: dimension mismatch ({} vs {})", who, rho.dim(), sigma.dim()));
  }
}

Spectrum difference_spectrum(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return hermitian_eig(rho.matrix() - sigma.matrix());
}

// Moves the eigenpairs listed in `order` (by decreasing magnitude) into a PSD
// part, then pads with the unused eigenvectors so the basis stays unitary.
Spectrum part_spectrum(const Spectrum& delta, const std::vector<Eigen::Index>& order, double sign) {
  const Eigen::Index d = delta.eigenvalues.size();
  Spectrum part;
  part.eigenvalues = RealVector::Zero(d);
  part.eigenvectors.resize(d, d);
  std::vector<bool> used(static_cast<size_t>(d), false);
  Eigen::Index col = 0;
  for (Eigen::Index j : order) {
    part.eigenvalues(col) = sign * delta.eigenvalues(j);
    part.eigenvectors.col(col) = delta.eigenvectors.col(j);
    used[static_cast<size_t>(j)] = true;
    ++col;
  }
  for (Eigen::Index j = 0; j < d; ++j) {
    if (!used[static_cast<size_t>(j)]) part.eigenvectors.col(col++) = delta.eigenvectors.col(j);
  }
  return part;
}

}  // namespace

SignedDecomposition signed_decomposition(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "signed_decomposition");
  SignedDecomposition sd;
  sd.delta_spectrum = difference_spectrum(rho, sigma);
  const Spectrum& delta = sd.delta_spectrum;
  const Eigen::Index d = delta.eigenvalues.size();

  std::vector<Eigen::Index> positive;
  std::vector<Eigen::Index> negative;
  for (Eigen::Index j = 0; j < d; ++j) {
    if (delta.eigenvalues(j) > kSignedDropTol) positive.push_back(j);
  }
  // Walk from the bottom so magnitudes come out decreasing.
  for (Eigen::Index j = d - 1; j >= 0; --j) {
    if (delta.eigenvalues(j) < -kSignedDropTol) negative.push_back(j);
  }

  sd.plus_spectrum = part_spectrum(delta, positive, 1.0);
  sd.minus_spectrum = part_spectrum(delta, negative, -1.0);
  sd.delta_plus = sd.plus_spectrum.reconstruct();
  sd.delta_minus = sd.minus_spectrum.reconstruct();
  return sd;
}

double trace_distance(const Spectrum& delta_spectrum) { return 0.5 * delta_spectrum.eigenvalues.cwiseAbs().sum(); }

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "trace_distance");
  return trace_distance(difference_spectrum(rho, sigma));
}

double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "hs_distance");
  // Tr(A^2) = sum_ij |A_ij|^2 for Hermitian A.
  return (rho.matrix() - sigma.matrix()).squaredNorm();
}

double hs_distance_spectral(const Spectrum& delta_spectrum) { return delta_spectrum.eigenvalues.squaredNorm(); }

std::optional<double> q_ratio(double trace_dist, double hs_dist) {
  if (!(hs_dist > kQDegeneracyTol)) return std::nullopt;
  return trace_dist * trace_dist / hs_dist;
}

std::optional<double> q_ratio(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const DistancePair p = distances(rho, sigma);
  return p.q_ratio;
}

DistancePair distances(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dim(rho, sigma, "distances");
  DistancePair p;
  p.trace_distance = trace_distance(difference_spectrum(rho, sigma));
  p.hs_distance = hs_distance(rho, sigma);
  p.q_ratio = q_ratio(p.trace_distance, p.hs_distance);
  return p;
}

}  // namespace tracebound
