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

#ifndef TRACEBOUND_EXPERIMENTS_HPP
#define TRACEBOUND_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tracebound/bounds.hpp"
#include "tracebound/sampling.hpp"

namespace tracebound {

/// How pair-level loops run. `serial` is the plain reference loop; `parallel`
/// distributes indices with OpenMP. Both produce bit-identical results since
/// every index owns its RNG stream.
enum class Execution { serial, parallel };

/// One point of the Q-versus-R scatter, plus its certificate columns.
struct SampleRecord {
  std::uint64_t index = 0;
  int d = 0;
  int rank_rho = 0;
  int rank_sigma = 0;
  double reduced_rank = 0.0;
  double trace_distance = 0.0;
  double hs_distance = 0.0;
  double q_ratio = 0.0;
  double upper_theorem1 = 0.0;
  double upper_norm_equiv = 0.0;
  double upper_rank_sum = 0.0;
  double upper_entropy_p2 = 0.0;
  double upper_entropy_p3 = 0.0;
  bool lemma1_ok = false;
  bool weyl_ok = false;
};

/// Where and why a check failed; enough to regenerate the pair.
struct Violation {
  int dim = 0;
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::string what;
};

struct ExperimentSummary {
  std::uint64_t n_samples = 0;
  std::uint64_t violations = 0;
  double max_q_over_r = 0.0;
  double min_q = 0.0;
  double runtime_seconds = 0.0;
  std::uint64_t seed = 0;
  /// Pairs discarded because D_HS fell below the Q degeneracy threshold.
  std::uint64_t redraws = 0;
  std::vector<Violation> failures;
};

struct Figure1Result {
  std::vector<SampleRecord> records;
  ExperimentSummary summary;
};

/// Draws the `index`-th (rho, sigma) pair of the scatter experiment from
/// stream (seed, index): rho first, then sigma, redrawing both while
/// D_HS <= 1e-12. `redraws` receives the number of discarded pairs.
std::pair<DensityMatrix, DensityMatrix> figure1_pair(int dim, std::uint64_t seed, std::uint64_t index,
                                                     std::uint64_t* redraws = nullptr);

SampleRecord make_record(std::uint64_t index, const BoundReport& report);

/// Checks one record against the Q bound chain and every upper bound.
/// Returns a description of the first failure, or nullopt.
std::optional<std::string> check_record(const SampleRecord& rec);

/// n pairs (fig1_rho, fig1_sigma) at dimension d in [4, 64], sorted stably
/// by (R, index).
Figure1Result run_figure1(int dim, std::uint64_t n, std::uint64_t seed, Execution exec = Execution::parallel,
                          double rank_tol = kDefaultRankTol);

/// Largest Q seen for each distinct R value, ascending in R.
struct EnvelopePoint {
  double reduced_rank = 0.0;
  double max_q = 0.0;
  std::uint64_t count = 0;
};
std::vector<EnvelopePoint> q_envelope(const std::vector<SampleRecord>& records);

// ---------------------------------------------------------------------------
// Closed-form examples.

enum class ExampleFamily {
  /// Pi_r/r against I/d.
  projector_vs_mixed,
  /// Pi_r/r against Pi_s/s on an orthogonal subspace.
  orthogonal_projectors,
};

const char* to_string(ExampleFamily family);

struct ExampleRow {
  ExampleFamily family = ExampleFamily::projector_vs_mixed;
  int d = 0;
  int r = 0;
  int s = 0;  // rank of sigma: d in the maximally mixed family
  bool skipped = false;
  std::string skip_reason;
  double reduced_rank = 0.0;
  double trace_distance = 0.0;
  double hs_distance = 0.0;
  double q_ratio = 0.0;
  double expected_trace_distance = 0.0;
  double expected_hs_distance = 0.0;
  double expected_q_ratio = 0.0;

  double max_residual() const;
};

/// Projector-vs-maximally-mixed rows for r = 1..d, then orthogonal projector
/// rows for every r + s <= d, each compared against its closed form.
std::vector<ExampleRow> examples_table(int dim);

// ---------------------------------------------------------------------------
// Conjectured bound D^2 <= D_HS / Tr(rho^2).

enum class CandidateKind {
  random_pair,
  /// rho = U diag(lambda) U^dagger, non-flat on k states; sigma moves weight
  /// c off each of those k states and spreads k c evenly over the other
  /// d - k. Then Q = k m/(k + m) with m = d - k, which beats 1/Tr(rho^2)
  /// whenever Tr(rho^2) > 1/k + 1/m.
  flat_shift,
};

const char* to_string(CandidateKind kind);

struct Candidate {
  CandidateKind kind = CandidateKind::random_pair;
  DensityMatrix rho;
  DensityMatrix sigma;
};

/// Regenerates candidate `index` of the search with `seed`. Even indices are
/// random pairs, odd ones flat_shift (random for d < 3).
Candidate conjecture_candidate(int dim, std::uint64_t seed, std::uint64_t index);

/// D^2 - D_HS / Tr(rho^2); positive means the conjecture fails for this pair.
double conjecture_margin(const DensityMatrix& rho, const DensityMatrix& sigma);

struct Counterexample {
  int dim = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  CandidateKind kind = CandidateKind::random_pair;
  double margin = 0.0;
};

struct CounterexampleSearch {
  std::optional<Counterexample> found;
  std::uint64_t candidates_tried = 0;
  std::uint64_t skipped_pure_rho = 0;
  bool exhausted() const { return !found.has_value(); }
};

/// Scans candidates 0..budget-1 and reports the lowest-index violation.
CounterexampleSearch find_conjecture_counterexample(int dim, std::uint64_t budget, std::uint64_t seed,
                                                    Execution exec = Execution::parallel);

// ---------------------------------------------------------------------------
// Property sweep.

struct SweepOptions {
  double rank_tol = kDefaultRankTol;
  /// Use sigma = rho for every pair.
  bool force_equal = false;
  /// Added to upper_theorem1 before checking; a negative value corrupts the
  /// bound and must surface as violations.
  double inject_theorem1_offset = 0.0;
  Execution exec = Execution::parallel;
};

/// Runs every bound, signed-part rank, Weyl, ordering and pure-state check over
/// n_per_dim pairs for each dimension. Pair kinds rotate with the index.
ExperimentSummary verify_sweep(const std::vector<int>& dims, std::uint64_t n_per_dim, std::uint64_t seed,
                               const SweepOptions& options = {});

}  // namespace tracebound

#endif  // TRACEBOUND_EXPERIMENTS_HPP
