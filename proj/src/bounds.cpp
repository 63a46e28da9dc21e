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

#include "tracebound/bounds.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace tracebound {

double bound_slack(int dim) { return dim > 64 ? 1e-9 * dim : 1e-9; }

double reduced_rank(int rank_rho, int rank_sigma) {
  if (rank_rho < 1 || rank_sigma < 1) {
    throw ValidationError(
        fmt::format("reduced_rank: ranks must be >= 1 (got {} and {})", rank_rho, rank_sigma));
  }
  const double a = rank_rho;
  const double b = rank_sigma;
  return a * b / (a + b);
}

double norm_equivalence_upper(int dim, double hs) { return 0.25 * dim * hs; }

double rank_sum_upper(int rank_rho, int rank_sigma, double hs) {
  return 0.25 * static_cast<double>(rank_rho + rank_sigma) * hs;
}

double theorem1_upper(int rank_rho, int rank_sigma, double hs) {
  return reduced_rank(rank_rho, rank_sigma) * hs;
}

double entropy_upper_p2(double hs, double sl_rho, double sl_sigma) { return 0.5 * (hs + sl_rho + sl_sigma); }

double entropy_upper_p3(double hs, double sl_rho, double sl_sigma) { return hs + std::min(sl_rho, sl_sigma); }

Lemma1Check check_lemma1(const SignedDecomposition& sd, int rank_rho, int rank_sigma, double tol) {
  Lemma1Check c;
  c.rank_plus = numerical_rank(sd.plus_spectrum, tol);
  c.rank_minus = numerical_rank(sd.minus_spectrum, tol);
  c.rank_rho = rank_rho;
  c.rank_sigma = rank_sigma;
  c.ok = c.rank_plus <= rank_rho && c.rank_minus <= rank_sigma;
  return c;
}

bool check_weyl(const Spectrum& rho_spec, const Spectrum& sigma_spec, const Spectrum& delta_spec, double tol) {
  const Eigen::Index d = delta_spec.eigenvalues.size();
  if (rho_spec.eigenvalues.size() != d || sigma_spec.eigenvalues.size() != d) return false;
  for (Eigen::Index j = 0; j < d; ++j) {
    const double delta = delta_spec.eigenvalues(j);
    // Spectrum of sigma - rho in decreasing order is -delta read backwards.
    const double delta_bar = -delta_spec.eigenvalues(d - 1 - j);
    if (rho_spec.eigenvalues(j) < delta - tol) return false;
    if (sigma_spec.eigenvalues(j) < delta_bar - tol) return false;
  }
  return true;
}

BoundReport build_report(const DensityMatrix& rho, const DensityMatrix& sigma, double rank_tol) {
  if (rho.dim() != sigma.dim()) {
    throw ValidationError(fmt::format("build_report: dimension mismatch ({} vs {})", rho.dim(), sigma.dim()));
  }
  BoundReport r;
  r.dim = rho.dim();
  r.rank_tol = rank_tol;
  r.rank_rho = rho.rank(rank_tol);
  r.rank_sigma = sigma.rank(rank_tol);
  r.reduced_rank = reduced_rank(r.rank_rho, r.rank_sigma);

  const SignedDecomposition sd = signed_decomposition(rho, sigma);
  r.trace_distance = trace_distance(sd.delta_spectrum);
  r.hs_distance = hs_distance(rho, sigma);
  r.q_ratio = q_ratio(r.trace_distance, r.hs_distance);

  r.purity_rho = purity(rho);
  r.purity_sigma = purity(sigma);
  r.linear_entropy_rho = 1.0 - r.purity_rho;
  r.linear_entropy_sigma = 1.0 - r.purity_sigma;

  const double hs = r.hs_distance;
  r.lower_bound_half_hs = 0.5 * hs;
  r.upper_norm_equiv = norm_equivalence_upper(r.dim, hs);
  r.upper_rank_sum = rank_sum_upper(r.rank_rho, r.rank_sigma, hs);
  r.upper_theorem1 = theorem1_upper(r.rank_rho, r.rank_sigma, hs);
  r.upper_entropy_p2 = entropy_upper_p2(hs, r.linear_entropy_rho, r.linear_entropy_sigma);
  r.upper_entropy_p3 = entropy_upper_p3(hs, r.linear_entropy_rho, r.linear_entropy_sigma);
  r.best_upper = std::min({r.upper_norm_equiv, r.upper_rank_sum, r.upper_theorem1, r.upper_entropy_p2,
                           r.upper_entropy_p3});

  r.lemma1 = check_lemma1(sd, r.rank_rho, r.rank_sigma, rank_tol);
  r.lemma1_ok = r.lemma1.ok;
  r.weyl_ok = check_weyl(rho.spectrum(), sigma.spectrum(), sd.delta_spectrum, kWeylTol);
  return r;
}

}  // namespace tracebound
