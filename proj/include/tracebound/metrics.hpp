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

#ifndef TRACEBOUND_METRICS_HPP
#define TRACEBOUND_METRICS_HPP

#include <optional>

#include "tracebound/states.hpp"

namespace tracebound {

/// Eigenvalues of rho - sigma with |delta| at or below this belong to neither part.
inline constexpr double kSignedDropTol = 1e-12;
/// D_HS at or below this leaves Q undefined.
inline constexpr double kQDegeneracyTol = 1e-12;

/// Jordan decomposition rho - sigma = delta_plus - delta_minus.
///
/// Both parts are PSD with orthogonal supports. Their spectra are assembled
/// directly from the eigenpairs of the difference: `plus_spectrum` holds the
/// positive eigenvalues in decreasing order followed by zeros, and
/// `minus_spectrum` the magnitudes of the negative ones, likewise. The
/// spectrum of the difference itself is kept in `delta_spectrum`.
struct SignedDecomposition {
  ComplexMatrix delta_plus;
  ComplexMatrix delta_minus;
  Spectrum plus_spectrum;
  Spectrum minus_spectrum;
  Spectrum delta_spectrum;

  int dim() const { return static_cast<int>(delta_plus.rows()); }
  double trace_plus() const { return plus_spectrum.eigenvalues.sum(); }
  double trace_minus() const { return minus_spectrum.eigenvalues.sum(); }
};

struct DistancePair {
  double trace_distance = 0.0;
  double hs_distance = 0.0;
  std::optional<double> q_ratio;
};

SignedDecomposition signed_decomposition(const DensityMatrix& rho, const DensityMatrix& sigma);

/// D = (1/2) sum_j |delta_j|.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const Spectrum& delta_spectrum);

/// D_HS = Tr[(rho - sigma)^2], summed entrywise; never diagonalizes.
double hs_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// D_HS from the spectrum of the difference. Cross-check only.
double hs_distance_spectral(const Spectrum& delta_spectrum);

/// D^2 / D_HS, or nullopt when D_HS <= kQDegeneracyTol.
std::optional<double> q_ratio(const DensityMatrix& rho, const DensityMatrix& sigma);
std::optional<double> q_ratio(double trace_dist, double hs_dist);

/// Both distances and Q with a single diagonalization.
DistancePair distances(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace tracebound

#endif  // TRACEBOUND_METRICS_HPP
