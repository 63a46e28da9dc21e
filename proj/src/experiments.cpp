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

#include "tracebound/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>

#include <fmt/format.h>

namespace tracebound {

namespace {

constexpr double kQChainSlack = 1e-9;
constexpr double kOrderingSlack = 1e-12;
constexpr double kIdentityTol = 1e-10;
// A conjecture "violation" must clear roundoff.
constexpr double kConjectureMarginTol = 1e-12;
constexpr std::int64_t kSearchChunk = 1024;

// Runs fn(i) for i in [begin, end). Exceptions thrown inside the OpenMP
// region are captured and the lowest-index one is rethrown afterwards.
template <typename Fn>
void for_each_index(std::int64_t begin, std::int64_t end, Execution exec, Fn&& fn) {
  if (exec == Execution::serial) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::int64_t first_index = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = begin; i < end; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(tracebound_error)
      {
        if (i < first_index) {
          first_index = i;
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void update_q_stats(ExperimentSummary& s, double q, double r, bool& first) {
  if (first) {
    s.min_q = q;
    s.max_q_over_r = q / r;
    first = false;
  } else {
    s.min_q = std::min(s.min_q, q);
    s.max_q_over_r = std::max(s.max_q_over_r, q / r);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Scatter experiment.

std::pair<DensityMatrix, DensityMatrix> figure1_pair(int dim, std::uint64_t seed, std::uint64_t index,
                                                     std::uint64_t* redraws) {
  RngStream rng(seed, index);
  std::uint64_t discarded = 0;
  for (;;) {
    DensityMatrix rho = fig1_rho(dim, rng);
    DensityMatrix sigma = fig1_sigma(dim, rng);
    if (hs_distance(rho, sigma) > kQDegeneracyTol) {
      if (redraws) *redraws = discarded;
      return {std::move(rho), std::move(sigma)};
    }
    ++discarded;
  }
}

SampleRecord make_record(std::uint64_t index, const BoundReport& report) {
  SampleRecord rec;
  rec.index = index;
  rec.d = report.dim;
  rec.rank_rho = report.rank_rho;
  rec.rank_sigma = report.rank_sigma;
  rec.reduced_rank = report.reduced_rank;
  rec.trace_distance = report.trace_distance;
  rec.hs_distance = report.hs_distance;
  rec.q_ratio = report.q_ratio.value_or(std::numeric_limits<double>::quiet_NaN());
  rec.upper_theorem1 = report.upper_theorem1;
  rec.upper_norm_equiv = report.upper_norm_equiv;
  rec.upper_rank_sum = report.upper_rank_sum;
  rec.upper_entropy_p2 = report.upper_entropy_p2;
  rec.upper_entropy_p3 = report.upper_entropy_p3;
  rec.lemma1_ok = report.lemma1_ok;
  rec.weyl_ok = report.weyl_ok;
  return rec;
}

std::optional<std::string> check_record(const SampleRecord& rec) {
  const double d2 = rec.trace_distance * rec.trace_distance;
  const double slack = bound_slack(rec.d);
  const double q_cap = std::min(rec.reduced_rank, 0.25 * rec.d);
  if (!(rec.q_ratio >= 0.5 - kQChainSlack)) return fmt::format("Q={:.17g} below 1/2", rec.q_ratio);
  if (!(rec.q_ratio <= q_cap + kQChainSlack)) {
    return fmt::format("Q={:.17g} above min(R, d/4)={:.17g}", rec.q_ratio, q_cap);
  }
  if (0.5 * rec.hs_distance > d2 + slack) return fmt::format("D^2={:.17g} below D_HS/2", d2);
  const std::pair<const char*, double> uppers[] = {
      {"theorem1", rec.upper_theorem1},     {"norm_equiv", rec.upper_norm_equiv},
      {"rank_sum", rec.upper_rank_sum},     {"entropy_p2", rec.upper_entropy_p2},
      {"entropy_p3", rec.upper_entropy_p3},
  };
  for (const auto& [name, value] : uppers) {
    if (d2 > value + slack) return fmt::format("D^2={:.17g} exceeds {} bound {:.17g}", d2, name, value);
  }
  if (rec.upper_theorem1 > rec.upper_rank_sum + kOrderingSlack) return std::string("theorem1 bound above rank_sum bound");
  if (!rec.lemma1_ok) return std::string("rank(Delta+-) exceeds rank(rho) or rank(sigma)");
  if (!rec.weyl_ok) return std::string("Weyl eigenvalue check failed");
  return std::nullopt;
}

Figure1Result run_figure1(int dim, std::uint64_t n, std::uint64_t seed, Execution exec, double rank_tol) {
  if (dim < 4 || dim > 64) throw ValidationError(fmt::format("run_figure1: dimension {} outside [4, 64]", dim));
  if (n < 1) throw ValidationError("run_figure1: need at least one sample");
  const auto start = std::chrono::steady_clock::now();

  Figure1Result out;
  out.records.resize(n);
  std::vector<std::uint64_t> redraws(n, 0);
  for_each_index(0, static_cast<std::int64_t>(n), exec, [&](std::int64_t i) {
    const auto idx = static_cast<std::uint64_t>(i);
    auto [rho, sigma] = figure1_pair(dim, seed, idx, &redraws[idx]);
    out.records[idx] = make_record(idx, build_report(rho, sigma, rank_tol));
  });

  std::stable_sort(out.records.begin(), out.records.end(), [](const SampleRecord& a, const SampleRecord& b) {
    if (a.reduced_rank != b.reduced_rank) return a.reduced_rank < b.reduced_rank;
    return a.index < b.index;
  });

  ExperimentSummary& s = out.summary;
  s.n_samples = n;
  s.seed = seed;
  bool first = true;
  for (const SampleRecord& rec : out.records) {
    s.redraws += redraws[rec.index];
    update_q_stats(s, rec.q_ratio, rec.reduced_rank, first);
    if (auto failure = check_record(rec)) s.failures.push_back({dim, rec.index, seed, std::move(*failure)});
  }
  s.violations = s.failures.size();
  s.runtime_seconds = elapsed_seconds(start);
  return out;
}

std::vector<EnvelopePoint> q_envelope(const std::vector<SampleRecord>& records) {
  std::map<double, EnvelopePoint> bins;
  for (const SampleRecord& rec : records) {
    EnvelopePoint& p = bins[rec.reduced_rank];
    p.reduced_rank = rec.reduced_rank;
    p.max_q = p.count == 0 ? rec.q_ratio : std::max(p.max_q, rec.q_ratio);
    ++p.count;
  }
  std::vector<EnvelopePoint> out;
  out.reserve(bins.size());
  for (const auto& [r, p] : bins) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form examples.

double ExampleRow::max_residual() const {
  if (skipped) return 0.0;
  return std::max({std::abs(trace_distance - expected_trace_distance), std::abs(hs_distance - expected_hs_distance),
                   std::abs(q_ratio - expected_q_ratio)});
}

namespace {

ExampleRow evaluate_example(ExampleFamily family, int d, int r, int s, const DensityMatrix& rho, const DensityMatrix& sigma) {
  ExampleRow row;
  row.family = family;
  row.d = d;
  row.r = r;
  row.s = s;
  const BoundReport rep = build_report(rho, sigma);
  row.reduced_rank = rep.reduced_rank;
  row.trace_distance = rep.trace_distance;
  row.hs_distance = rep.hs_distance;
  row.q_ratio = rep.q_ratio.value_or(std::numeric_limits<double>::quiet_NaN());
  return row;
}

}  // namespace

const char* to_string(ExampleFamily family) {
  switch (family) {
    case ExampleFamily::projector_vs_mixed:
      return "mixed";
    case ExampleFamily::orthogonal_projectors:
      return "orthogonal";
  }
  return "unknown";
}

std::vector<ExampleRow> examples_table(int dim) {
  if (dim < 4) throw ValidationError(fmt::format("examples_table: dimension must be >= 4, got {}", dim));
  const double d = dim;
  const DensityMatrix mixed = projector_state(dim, dim, 0);
  std::vector<ExampleRow> rows;

  for (int r = 1; r <= dim; ++r) {
    if (r == dim) {
      ExampleRow row;
      row.family = ExampleFamily::projector_vs_mixed;
      row.d = dim;
      row.r = r;
      row.s = dim;
      row.skipped = true;
      row.skip_reason = "states equal";
      rows.push_back(row);
      continue;
    }
    ExampleRow row = evaluate_example(ExampleFamily::projector_vs_mixed, dim, r, dim, projector_state(dim, r, 0), mixed);
    const double rr = r;
    const double closed_r = d * rr / (d + rr);
    row.expected_trace_distance = (d - rr) / d;
    row.expected_hs_distance = (d - rr) / (d * rr);
    row.expected_q_ratio = closed_r * (d * d - rr * rr) / (d * d);
    rows.push_back(row);
  }

  for (int r = 1; r < dim; ++r) {
    for (int s = 1; r + s <= dim; ++s) {
      ExampleRow row = evaluate_example(ExampleFamily::orthogonal_projectors, dim, r, s, projector_state(dim, r, 0), projector_state(dim, s, r));
      const double rr = r;
      const double ss = s;
      row.expected_trace_distance = 1.0;
      row.expected_hs_distance = (rr + ss) / (rr * ss);
      row.expected_q_ratio = rr * ss / (rr + ss);
      rows.push_back(row);
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Conjecture search.

const char* to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::random_pair:
      return "random_pair";
    case CandidateKind::flat_shift:
      return "flat_shift";
  }
  return "unknown";
}

Candidate conjecture_candidate(int dim, std::uint64_t seed, std::uint64_t index) {
  if (dim < 2) throw ValidationError(fmt::format("conjecture_candidate: dimension must be >= 2, got {}", dim));
  RngStream rng(seed, index);
  if (index % 2 == 0 || dim < 3) {
    DensityMatrix rho = fig1_sigma(dim, rng);
    DensityMatrix sigma = fig1_sigma(dim, rng);
    return Candidate{CandidateKind::random_pair, std::move(rho), std::move(sigma)};
  }

  const int k = rng.uniform_int(2, dim - 1);
  const int m = dim - k;
  const double lo = 1.0 / k;
  const RealVector lambda = purity_spectrum(dim, k, lo + (1.0 - lo) * rng.uniform());
  const double shift = lambda(k - 1) * (1.0 - rng.uniform());
  RealVector mu = lambda;
  mu.head(k).array() -= shift;
  mu.tail(m).array() += shift * k / m;
  const ComplexMatrix u = haar_unitary(dim, rng);
  return Candidate{CandidateKind::flat_shift, conjugated_state(lambda, u), conjugated_state(mu, u)};
}

double conjecture_margin(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const DistancePair p = distances(rho, sigma);
  return p.trace_distance * p.trace_distance - p.hs_distance / purity(rho);
}

CounterexampleSearch find_conjecture_counterexample(int dim, std::uint64_t budget, std::uint64_t seed,
                                                    Execution exec) {
  if (dim < 2) throw ValidationError(fmt::format("counterexample search: dimension must be >= 2, got {}", dim));
  if (budget < 1) throw ValidationError("counterexample search: budget must be >= 1");

  CounterexampleSearch out;
  const auto total = static_cast<std::int64_t>(budget);
  constexpr double kSkipped = -std::numeric_limits<double>::infinity();
  std::vector<double> margins;
  std::vector<CandidateKind> kinds;

  for (std::int64_t begin = 0; begin < total; begin += kSearchChunk) {
    const std::int64_t end = std::min(total, begin + kSearchChunk);
    margins.assign(static_cast<size_t>(end - begin), kSkipped);
    kinds.assign(static_cast<size_t>(end - begin), CandidateKind::random_pair);
    for_each_index(begin, end, exec, [&](std::int64_t i) {
      const Candidate c = conjecture_candidate(dim, seed, static_cast<std::uint64_t>(i));
      const auto slot = static_cast<size_t>(i - begin);
      kinds[slot] = c.kind;
      // Pure rho: Tr(rho^2) = 1 and the conjecture reduces to a proven bound.
      if (c.rho.rank() <= 1) return;
      margins[slot] = conjecture_margin(c.rho, c.sigma);
    });
    for (std::int64_t i = begin; i < end; ++i) {
      const auto slot = static_cast<size_t>(i - begin);
      ++out.candidates_tried;
      if (margins[slot] == kSkipped) {
        ++out.skipped_pure_rho;
        continue;
      }
      if (margins[slot] > kConjectureMarginTol) {
        out.found = Counterexample{dim, seed, static_cast<std::uint64_t>(i), kinds[slot], margins[slot]};
        return out;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Property sweep.

namespace {

std::uint64_t sweep_stream(int dim, std::uint64_t index) { return (static_cast<std::uint64_t>(dim) << 40) | index; }

std::pair<DensityMatrix, DensityMatrix> sweep_pair(int dim, std::uint64_t index, RngStream& rng) {
  switch (index % 4) {
    case 0:
      if (dim >= 4) {
        DensityMatrix rho = fig1_rho(dim, rng);
        return {std::move(rho), fig1_sigma(dim, rng)};
      }
      [[fallthrough]];
    case 1: {
      DensityMatrix rho = ginibre_fixed_rank(dim, rng.uniform_int(1, dim), rng);
      return {std::move(rho), ginibre_fixed_rank(dim, rng.uniform_int(1, dim), rng)};
    }
    case 2: {
      DensityMatrix rho = fig1_sigma(dim, rng);
      return {std::move(rho), fig1_sigma(dim, rng)};
    }
    default: {
      DensityMatrix rho = haar_pure(dim, rng);
      return {std::move(rho), fig1_sigma(dim, rng)};
    }
  }
}

struct PairOutcome {
  std::vector<std::string> failures;
  std::optional<double> q;
  double r = 0.0;
};

PairOutcome check_pair(int dim, std::uint64_t index, std::uint64_t seed, const SweepOptions& opt) {
  PairOutcome out;
  RngStream rng(seed, sweep_stream(dim, index));
  auto [rho, sigma_drawn] = sweep_pair(dim, index, rng);
  const DensityMatrix sigma = opt.force_equal ? rho : sigma_drawn;
  auto fail = [&](std::string what) { out.failures.push_back(std::move(what)); };

  const BoundReport rep = build_report(rho, sigma, opt.rank_tol);
  const SignedDecomposition sd = signed_decomposition(rho, sigma);
  const double d2 = rep.trace_distance_sq();
  const double slack = bound_slack(dim);
  out.q = rep.q_ratio;
  out.r = rep.reduced_rank;

  if (rep.lower_bound_half_hs > d2 + slack) fail("lower bound D_HS/2 <= D^2");
  if (d2 > rep.upper_theorem1 + opt.inject_theorem1_offset + slack) fail("theorem1 upper bound");
  if (d2 > rep.upper_rank_sum + slack) fail("rank_sum upper bound");
  if (d2 > rep.upper_norm_equiv + slack) fail("norm_equiv upper bound");
  if (d2 > rep.upper_entropy_p2 + slack) fail("entropy_p2 upper bound");
  if (d2 > rep.upper_entropy_p3 + slack) fail("entropy_p3 upper bound");
  if (rep.upper_theorem1 > rep.upper_rank_sum + kOrderingSlack) fail("theorem1 <= rank_sum ordering");
  if (rep.reduced_rank > std::min(rep.rank_rho, rep.rank_sigma)) fail("R <= min ranks");
  if (rep.q_ratio) {
    const double q = *rep.q_ratio;
    if (q < 0.5 - kQChainSlack || q > std::min(rep.reduced_rank, 0.25 * dim) + kQChainSlack) fail("Q bound chain");
  }
  if (!rep.lemma1_ok) fail("signed-part ranks");
  if (!rep.weyl_ok) fail("Weyl eigenvalue ordering");
  if (std::abs(sd.trace_plus() - rep.trace_distance) > kIdentityTol ||
      std::abs(sd.trace_minus() - rep.trace_distance) > kIdentityTol) {
    fail("Tr(delta_plus) = Tr(delta_minus) = D");
  }
  if (std::abs(hs_distance_spectral(sd.delta_spectrum) - rep.hs_distance) > kIdentityTol) {
    fail("entrywise vs spectral D_HS");
  }

  // Pure-state identity on an extra Haar pair from the same stream.
  const DensityMatrix psi = haar_pure(dim, rng);
  const DensityMatrix phi = haar_pure(dim, rng);
  const DistancePair pp = distances(psi, phi);
  const double pd2 = pp.trace_distance * pp.trace_distance;
  if (std::abs(pd2 - 0.5 * pp.hs_distance) > kIdentityTol) fail("pure-state identity D^2 = D_HS/2");
  if (std::abs(entropy_upper_p2(pp.hs_distance, linear_entropy(psi), linear_entropy(phi)) - pd2) > kIdentityTol) {
    fail("entropy_p2 tight on pure pair");
  }
  return out;
}

}  // namespace

ExperimentSummary verify_sweep(const std::vector<int>& dims, std::uint64_t n_per_dim, std::uint64_t seed,
                               const SweepOptions& options) {
  if (dims.empty()) throw ValidationError("verify_sweep: need at least one dimension");
  for (int d : dims) {
    if (d < 1 || d > 64) throw ValidationError(fmt::format("verify_sweep: dimension {} outside [1, 64]", d));
  }
  const auto start = std::chrono::steady_clock::now();
  ExperimentSummary s;
  s.seed = seed;
  bool first = true;

  for (int dim : dims) {
    std::vector<PairOutcome> outcomes(n_per_dim);
    for_each_index(0, static_cast<std::int64_t>(n_per_dim), options.exec, [&](std::int64_t i) {
      outcomes[static_cast<size_t>(i)] = check_pair(dim, static_cast<std::uint64_t>(i), seed, options);
    });
    for (std::uint64_t i = 0; i < n_per_dim; ++i) {
      PairOutcome& o = outcomes[i];
      ++s.n_samples;
      if (o.q) update_q_stats(s, *o.q, o.r, first);
      for (std::string& what : o.failures) s.failures.push_back({dim, i, seed, std::move(what)});
    }
  }
  s.violations = s.failures.size();
  s.runtime_seconds = elapsed_seconds(start);
  return s;
}

}  // namespace tracebound
