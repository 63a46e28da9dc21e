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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "test_support.hpp"
#include "tracebound/bounds.hpp"
#include "tracebound/sampling.hpp"

using namespace tracebound;

TEST_CASE("reduced_rank") {
  CHECK(reduced_rank(1, 1) == 0.5);
  CHECK(reduced_rank(1, 16) == doctest::Approx(16.0 / 17.0).epsilon(1e-15));
  CHECK(reduced_rank(1, 16) == doctest::Approx(0.94118).epsilon(1e-5));
  CHECK(reduced_rank(2, 2) == 1.0);
  CHECK_THROWS_AS(reduced_rank(0, 3), ValidationError);
  CHECK_THROWS_AS(reduced_rank(3, 0), ValidationError);

  for (int a = 1; a <= 40; ++a) {
    for (int b = 1; b <= 40; ++b) {
      const double r = reduced_rank(a, b);
      CHECK(r <= std::min(a, b));
      CHECK(r <= 0.25 * (a + b) + 1e-12);
      CHECK(r == reduced_rank(b, a));
    }
  }
}

TEST_CASE("norm_equivalence_upper, rank_sum_upper, theorem1_upper") {
  CHECK(norm_equivalence_upper(4, 1.0) == 1.0);
  CHECK(norm_equivalence_upper(16, 0.5) == 2.0);
  CHECK(norm_equivalence_upper(2, 0.0) == 0.0);

  CHECK(rank_sum_upper(1, 1, 1.0) == 0.5);
  // Pure vs I/16: D_HS = (d - r)/(d r) = 15/16, bound (17/4)(15/16).
  const double hs_pure_mixed = (16.0 - 1.0) / 16.0;
  CHECK(rank_sum_upper(1, 16, hs_pure_mixed) == doctest::Approx(17.0 / 4.0 * 15.0 / 16.0).epsilon(1e-15));
  CHECK(rank_sum_upper(1, 16, hs_pure_mixed) == doctest::Approx(3.984).epsilon(1e-3));
  CHECK(rank_sum_upper(2, 2, 0.0) == 0.0);

  CHECK(theorem1_upper(1, 16, 1.0) == doctest::Approx(16.0 / 17.0));
  CHECK(theorem1_upper(1, 16, 1.0) < 1.0);
  // Orthogonal Pi_2/2, Pi_2/2: D_HS = (r + s)/(r s) = 1 and D = 1.
  CHECK(theorem1_upper(2, 2, (2.0 + 2.0) / (2.0 * 2.0)) == 1.0);
  CHECK(theorem1_upper(3, 7, 0.0) == 0.0);
}

TEST_CASE("entropy bounds") {
  // Pure-pure: half of D_HS.
  CHECK(entropy_upper_p2(0.8, 0.0, 0.0) == 0.4);
  // Pi/2 vs I/4 at d = 4: D_HS = 2/8, S_L = 1/2 and 3/4, D = 1/2.
  const double hs = (4.0 - 2.0) / (4.0 * 2.0), sl_rho = 1.0 - 0.5, sl_sigma = 1.0 - 0.25;
  CHECK(entropy_upper_p2(hs, sl_rho, sl_sigma) == doctest::Approx(0.75));
  CHECK(entropy_upper_p2(hs, sl_rho, sl_sigma) >= 0.25);
  CHECK(entropy_upper_p2(0, 0, 0) == 0.0);

  CHECK(entropy_upper_p3(0.3, 0.0, 0.6) == 0.3);  // pure rho reduces to D_HS
  CHECK(entropy_upper_p3(hs, sl_rho, sl_sigma) == doctest::Approx(0.75));
  CHECK(entropy_upper_p3(0, 0, 0) == 0.0);
}

TEST_CASE("check_lemma1 examples") {
  const SignedDecomposition orth = signed_decomposition(projector_state(3, 1, 0), projector_state(3, 1, 1));
  const Lemma1Check a = check_lemma1(orth, 1, 1);
  CHECK(a.ok);
  CHECK(a.rank_plus == 1);
  CHECK(a.rank_minus == 1);

  const SignedDecomposition vs_mixed = signed_decomposition(projector_state(4, 2, 0), projector_state(4, 4, 0));
  const Lemma1Check b = check_lemma1(vs_mixed, 2, 4);
  CHECK(b.ok);
  CHECK(b.rank_plus == 2);
  CHECK(b.rank_minus == 2);
  CHECK(b.rank_rho == 2);
  CHECK(b.rank_sigma == 4);

  // Understated ranks must be caught.
  CHECK_FALSE(check_lemma1(vs_mixed, 1, 4).ok);
  CHECK_FALSE(check_lemma1(vs_mixed, 2, 1).ok);

  RngStream rng(2024, 0);
  const DensityMatrix rho = ginibre_fixed_rank(12, 3, rng);
  const DensityMatrix sigma = ginibre_fixed_rank(12, 5, rng);
  CHECK(check_lemma1(signed_decomposition(rho, sigma), rho.rank(), sigma.rank()).ok);
}

TEST_CASE("check_weyl examples") {
  const DensityMatrix rho = projector_state(4, 2, 0);
  CHECK(check_weyl(rho.spectrum(), rho.spectrum(), signed_decomposition(rho, rho).delta_spectrum));

  // Explicit lists for Pi/2 vs I/4: r = (1/2, 1/2, 0, 0), s = (1/4, ...),
  // delta = (1/4, 1/4, -1/4, -1/4), bar delta = (1/4, 1/4, -1/4, -1/4).
  Spectrum r, s, delta;
  r.eigenvalues = RealVector(4);
  s.eigenvalues = RealVector(4);
  delta.eigenvalues = RealVector(4);
  r.eigenvalues << 0.5, 0.5, 0, 0;
  s.eigenvalues << 0.25, 0.25, 0.25, 0.25;
  delta.eigenvalues << 0.25, 0.25, -0.25, -0.25;
  CHECK(check_weyl(r, s, delta));
  // Break it: claim rho's second eigenvalue is below delta_2.
  Spectrum bad = r;
  bad.eigenvalues << 0.5, 0.1, 0, 0;
  CHECK_FALSE(check_weyl(bad, s, delta));

  RngStream rng(77, 1);
  const DensityMatrix a = fig1_sigma(10, rng);
  const DensityMatrix b = fig1_sigma(10, rng);
  CHECK(check_weyl(a.spectrum(), b.spectrum(), signed_decomposition(a, b).delta_spectrum));
}

TEST_CASE("build_report examples") {
  SUBCASE("orthogonal projectors saturate the reduced-rank bound") {
    const BoundReport rep = build_report(projector_state(8, 2, 0), projector_state(8, 2, 2));
    CHECK(rep.trace_distance == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.hs_distance == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.reduced_rank == 1.0);
    CHECK(rep.q_ratio.value() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(rep.trace_distance_sq() - rep.upper_theorem1) < 1e-12);
    CHECK(rep.lemma1_ok);
    CHECK(rep.weyl_ok);
  }
  SUBCASE("pure vs maximally mixed at d = 16") {
    const BoundReport rep = build_report(projector_state(16, 1, 0), projector_state(16, 16, 0));
    const double d = 16, r = 1, big_r = d * r / (d + r);
    CHECK(rep.reduced_rank == doctest::Approx(16.0 / 17.0).epsilon(1e-15));
    CHECK(std::abs(rep.q_ratio.value() - big_r * (d * d - r * r) / (d * d)) < 1e-12);
    CHECK(rep.q_ratio.value() == doctest::Approx(0.9375).epsilon(1e-12));
    CHECK(rep.rank_rho == 1);
    CHECK(rep.rank_sigma == 16);
    CHECK(rep.rank_tol == kDefaultRankTol);
  }
  SUBCASE("equal states") {
    const DensityMatrix rho = projector_state(5, 3, 1);
    const BoundReport rep = build_report(rho, rho);
    CHECK(rep.trace_distance == 0.0);
    CHECK(rep.hs_distance == 0.0);
    CHECK_FALSE(rep.q_ratio.has_value());
    CHECK(rep.lemma1_ok);
    CHECK(rep.weyl_ok);
    CHECK(rep.best_upper == 0.0);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(build_report(projector_state(3, 1), projector_state(4, 1)), ValidationError);
  }
}

TEST_CASE("build_report invariants over random pairs") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = 2 + trial % 20;
    const DensityMatrix rho = tracebound::testing::random_state(d, gen);
    const DensityMatrix sigma = tracebound::testing::random_state(d, gen);
    const BoundReport rep = build_report(rho, sigma);
    const double d2 = rep.trace_distance_sq();
    const double slack = bound_slack(d);
    INFO("trial " << trial << " d " << d);

    CHECK(rep.best_upper == std::min({rep.upper_norm_equiv, rep.upper_rank_sum, rep.upper_theorem1,
                                      rep.upper_entropy_p2, rep.upper_entropy_p3}));
    CHECK(rep.lower_bound_half_hs <= d2 + slack);
    CHECK(d2 <= rep.best_upper + slack);
    CHECK(d2 <= rep.upper_theorem1 + slack);
    CHECK(d2 <= rep.upper_entropy_p2 + slack);
    CHECK(d2 <= rep.upper_entropy_p3 + slack);
    CHECK(rep.upper_theorem1 <= rep.upper_rank_sum + 1e-12);
    CHECK(rep.reduced_rank <= std::min(rep.rank_rho, rep.rank_sigma));
    CHECK(rep.lemma1_ok);
    CHECK(rep.weyl_ok);
    CHECK(rep.q_ratio.value() >= 0.5 - 1e-9);
    CHECK(rep.q_ratio.value() <= std::min(rep.reduced_rank, 0.25 * d) + 1e-9);
  }
}

TEST_CASE("orthogonal projector family saturates Q = R") {
  const int d = 12;
  for (int r = 1; r < d; ++r) {
    for (int s = 1; r + s <= d; ++s) {
      const BoundReport rep = build_report(projector_state(d, r, 0), projector_state(d, s, r));
      CHECK(std::abs(rep.q_ratio.value() - rep.reduced_rank) <= 1e-10);
      CHECK(rep.reduced_rank <= 0.25 * d + 1e-12);
    }
  }
}

TEST_CASE("bound_slack scales past d = 64") {
  CHECK(bound_slack(2) == 1e-9);
  CHECK(bound_slack(64) == 1e-9);
  CHECK(bound_slack(128) == doctest::Approx(128e-9));
}
