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

#ifndef TRACEBOUND_SAMPLING_HPP
#define TRACEBOUND_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <variant>

#include "tracebound/states.hpp"

namespace tracebound {

/// Reproducible random stream identified by (seed, stream_index).
///
/// Reproducibility contract, fixed for a given toolchain and libm:
///  - engine: std::mt19937_64 seeded through std::seed_seq with the four
///    32-bit words {seed_lo, seed_hi, stream_lo, stream_hi};
///  - uniform(): top 53 bits of one engine output times 2^-53, in [0, 1);
///  - uniform_int(lo, hi): rejection sampling on one engine output per try;
///  - normal pairs: Box-Muller, u1 = 1 - uniform() in (0, 1], u2 = uniform(),
///    z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = sqrt(-2 ln u1) sin(2 pi u2);
///  - complex_normal(): (z0 + i z1) / sqrt(2), so E|z|^2 = 1.
/// The std:: distributions are avoided on purpose: their output is
/// implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next_u64() { return engine_(); }
  double uniform();
  /// Uniform on [lo, hi], inclusive.
  int uniform_int(int lo, int hi);
  double normal();
  Complex complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// |psi><psi| for a normalized complex Gaussian vector.
DensityMatrix haar_pure(int dim, RngStream& rng);

/// G G^dagger / Tr(G G^dagger), G a dim x rank complex Ginibre matrix
/// (filled column by column).
DensityMatrix ginibre_fixed_rank(int dim, int rank, RngStream& rng);

/// Haar unitary: QR of a complex Ginibre matrix with the phases of diag(R)
/// moved into Q.
ComplexMatrix haar_unitary(int dim, RngStream& rng);

/// Spectrum with `support` nonzero entries and purity `target_purity`:
/// lambda_1 = (1 + (s-1) t)/s, lambda_{2..s} = (1 - t)/s,
/// t = sqrt((p s - 1)/(s - 1)). Entries beyond the support are zero.
RealVector purity_spectrum(int dim, int support, double target_purity);

/// One draw of the uniform-rank, uniform-purity state, with the drawn
/// parameters kept for inspection.
struct Fig1SigmaDraw {
  DensityMatrix state;
  int support = 0;
  double target_purity = 0.0;
};

Fig1SigmaDraw draw_fig1_sigma(int dim, RngStream& rng);

/// s uniform on {1..d}, purity uniform on [1/s, 1], random eigenbasis.
DensityMatrix fig1_sigma(int dim, RngStream& rng);

/// rank uniform on {1..floor(d/4)}, Ginibre with that rank. Needs d >= 4.
DensityMatrix fig1_rho(int dim, RngStream& rng);

// ---------------------------------------------------------------------------
// Ensemble description.

struct FixedRank {
  int rank = 1;
};
struct UniformRank {
  int lo = 1;
  int hi = 1;
};
using RankLaw = std::variant<FixedRank, UniformRank>;

enum class PurityLaw {
  /// Ginibre G G^dagger normalized; purity follows from the rank.
  ensemble_natural,
  /// Purity uniform on [1/rank, 1] via purity_spectrum, Haar eigenbasis.
  uniform_given_rank,
};

struct EnsembleSpec {
  int dim = 1;
  RankLaw rank_law = FixedRank{1};
  PurityLaw purity_law = PurityLaw::ensemble_natural;
  std::uint64_t seed = 0;

  /// Throws ValidationError unless 1 <= lo <= hi <= dim (or 1 <= r <= dim).
  void validate() const;

  static EnsembleSpec fig1_rho(int dim, std::uint64_t seed);
  static EnsembleSpec fig1_sigma(int dim, std::uint64_t seed);
};

/// One state from `spec`, drawn from an already-positioned stream.
DensityMatrix sample_state(const EnsembleSpec& spec, RngStream& rng);

/// The `index`-th state of the ensemble, drawn from stream (spec.seed, index).
DensityMatrix sample_state(const EnsembleSpec& spec, std::uint64_t index);

}  // namespace tracebound

#endif  // TRACEBOUND_SAMPLING_HPP
