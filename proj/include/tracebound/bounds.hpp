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

#ifndef TRACEBOUND_BOUNDS_HPP
#define TRACEBOUND_BOUNDS_HPP

#include <optional>

#include "tracebound/metrics.hpp"
#include "tracebound/states.hpp"

namespace tracebound {

/// Additive slack for comparing D^2 against a bound: 1e-9, scaled by d past d = 64.
double bound_slack(int dim);

/// Eigenvalue slack used by check_weyl inside build_report.
inline constexpr double kWeylTol = 1e-10;

// ---------------------------------------------------------------------------
// Upper bounds on D^2. Each takes the already-computed D_HS.

/// R = r_rho r_sigma / (r_rho + r_sigma). Throws on a rank below 1.
double reduced_rank(int rank_rho, int rank_sigma);

/// (d/4) D_HS, from rank(rho - sigma) <= d.
double norm_equivalence_upper(int dim, double hs);

/// ((r_rho + r_sigma)/4) D_HS, from subadditivity of rank.
double rank_sum_upper(int rank_rho, int rank_sigma, double hs);

/// R D_HS.
double theorem1_upper(int rank_rho, int rank_sigma, double hs);

/// (1/2)(D_HS + S_L(rho) + S_L(sigma)).
double entropy_upper_p2(double hs, double sl_rho, double sl_sigma);

/// D_HS + min(S_L(rho), S_L(sigma)).
double entropy_upper_p3(double hs, double sl_rho, double sl_sigma);

// ---------------------------------------------------------------------------
// Certificates.

struct Lemma1Check {
  bool ok = false;
  int rank_plus = 0;
  int rank_minus = 0;
  int rank_rho = 0;
  int rank_sigma = 0;
};

/// rank(delta_plus) <= rank(rho) and rank(delta_minus) <= rank(sigma), with
/// the ranks of the parts taken at relative tolerance `tol`.
Lemma1Check check_lemma1(const SignedDecomposition& sd, int rank_rho, int rank_sigma,
                         double tol = kDefaultRankTol);

/// r_j >= delta_j - tol and s_j >= bar_delta_j - tol for all j, where
/// bar_delta is the decreasing spectrum of sigma - rho.
bool check_weyl(const Spectrum& rho_spec, const Spectrum& sigma_spec, const Spectrum& delta_spec,
                double tol = kWeylTol);

/// Every distance, rank, entropy and bound for one pair of states.
struct BoundReport {
  int dim = 0;
  double rank_tol = kDefaultRankTol;
  int rank_rho = 0;
  int rank_sigma = 0;
  double reduced_rank = 0.0;
  double trace_distance = 0.0;
  double hs_distance = 0.0;
  std::optional<double> q_ratio;
  double purity_rho = 0.0;
  double purity_sigma = 0.0;
  double linear_entropy_rho = 0.0;
  double linear_entropy_sigma = 0.0;

  double lower_bound_half_hs = 0.0;
  double upper_norm_equiv = 0.0;
  double upper_rank_sum = 0.0;
  double upper_theorem1 = 0.0;
  double upper_entropy_p2 = 0.0;
  double upper_entropy_p3 = 0.0;
  double best_upper = 0.0;

  Lemma1Check lemma1;
  bool lemma1_ok = false;
  bool weyl_ok = false;

  double trace_distance_sq() const { return trace_distance * trace_distance; }
};

/// Builds the full report. Ranks are numerical ranks at `rank_tol`.
BoundReport build_report(const DensityMatrix& rho, const DensityMatrix& sigma,
                         double rank_tol = kDefaultRankTol);

}  // namespace tracebound

#endif  // TRACEBOUND_BOUNDS_HPP
