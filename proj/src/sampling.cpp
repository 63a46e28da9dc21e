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

#include "tracebound/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace tracebound {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

void require_dim(int dim, const char* who) {
  if (dim < 1) throw ValidationError(fmt::format("{}: dimension must be >= 1, got {}", who, dim));
}

int draw_rank(const RankLaw& law, RngStream& rng) {
  if (const auto* fixed = std::get_if<FixedRank>(&law)) return fixed->rank;
  const auto& u = std::get<UniformRank>(law);
  return rng.uniform_int(u.lo, u.hi);
}

Fig1SigmaDraw draw_uniform_purity(int dim, int support, RngStream& rng) {
  const double lo = 1.0 / support;
  const double p = lo + (1.0 - lo) * rng.uniform();
  const RealVector lambda = purity_spectrum(dim, support, p);
  const ComplexMatrix u = haar_unitary(dim, rng);
  return Fig1SigmaDraw{conjugated_state(lambda, u), support, p};
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index), engine_(seeded_engine(seed, stream_index)) {}

double RngStream::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int RngStream::uniform_int(int lo, int hi) {
  if (hi < lo) throw ValidationError(fmt::format("uniform_int: empty range [{}, {}]", lo, hi));
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;  // accept x <= limit
  std::uint64_t x = engine_();
  while (x > limit) x = engine_();
  return lo + static_cast<int>(x % range);
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex RngStream::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) * (1.0 / std::numbers::sqrt2);
}

DensityMatrix haar_pure(int dim, RngStream& rng) {
  require_dim(dim, "haar_pure");
  Eigen::VectorXcd psi(dim);
  for (int i = 0; i < dim; ++i) psi(i) = rng.complex_normal();
  psi.normalize();
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix ginibre_fixed_rank(int dim, int rank, RngStream& rng) {
  require_dim(dim, "ginibre_fixed_rank");
  if (rank < 1 || rank > dim) {
    throw ValidationError(fmt::format("ginibre_fixed_rank: rank {} outside [1, {}]", rank, dim));
  }
  ComplexMatrix g(dim, rank);
  for (int c = 0; c < rank; ++c) {
    for (int r = 0; r < dim; ++r) g(r, c) = rng.complex_normal();
  }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(std::move(m));
}

ComplexMatrix haar_unitary(int dim, RngStream& rng) {
  require_dim(dim, "haar_unitary");
  ComplexMatrix z(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) z(r, c) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const auto diag = qr.matrixQR().diagonal();
  for (int j = 0; j < dim; ++j) {
    const double mag = std::abs(diag(j));
    if (mag > 0.0) q.col(j) *= diag(j) / mag;
  }
  return q;
}

RealVector purity_spectrum(int dim, int support, double target_purity) {
  require_dim(dim, "purity_spectrum");
  if (support < 1 || support > dim) {
    throw ValidationError(fmt::format("purity_spectrum: support {} outside [1, {}]", support, dim));
  }
  const double s = support;
  if (target_purity < 1.0 / s - 1e-12 || target_purity > 1.0 + 1e-12) {
    throw ValidationError(
        fmt::format("purity_spectrum: purity {} outside [1/{}, 1]", target_purity, support));
  }
  double t = 0.0;
  if (support > 1) t = std::sqrt(std::clamp((target_purity * s - 1.0) / (s - 1.0), 0.0, 1.0));
  RealVector lambda = RealVector::Zero(dim);
  lambda(0) = (1.0 + (s - 1.0) * t) / s;
  for (int j = 1; j < support; ++j) lambda(j) = (1.0 - t) / s;
  return lambda;
}

Fig1SigmaDraw draw_fig1_sigma(int dim, RngStream& rng) {
  require_dim(dim, "fig1_sigma");
  const int support = rng.uniform_int(1, dim);
  return draw_uniform_purity(dim, support, rng);
}

DensityMatrix fig1_sigma(int dim, RngStream& rng) { return draw_fig1_sigma(dim, rng).state; }

DensityMatrix fig1_rho(int dim, RngStream& rng) {
  if (dim < 4) throw ValidationError(fmt::format("fig1_rho: dimension must be >= 4, got {}", dim));
  const int rank = rng.uniform_int(1, dim / 4);
  return ginibre_fixed_rank(dim, rank, rng);
}

void EnsembleSpec::validate() const {
  require_dim(dim, "EnsembleSpec");
  if (const auto* fixed = std::get_if<FixedRank>(&rank_law)) {
    if (fixed->rank < 1 || fixed->rank > dim) {
      throw ValidationError(fmt::format("EnsembleSpec: fixed rank {} outside [1, {}]", fixed->rank, dim));
    }
  } else {
    const auto& u = std::get<UniformRank>(rank_law);
    if (u.lo < 1 || u.lo > u.hi || u.hi > dim) {
      throw ValidationError(
          fmt::format("EnsembleSpec: need 1 <= lo <= hi <= {} (got lo={}, hi={})", dim, u.lo, u.hi));
    }
  }
}

EnsembleSpec EnsembleSpec::fig1_rho(int dim, std::uint64_t seed) {
  return EnsembleSpec{dim, UniformRank{1, std::max(1, dim / 4)}, PurityLaw::ensemble_natural, seed};
}

EnsembleSpec EnsembleSpec::fig1_sigma(int dim, std::uint64_t seed) {
  return EnsembleSpec{dim, UniformRank{1, dim}, PurityLaw::uniform_given_rank, seed};
}

DensityMatrix sample_state(const EnsembleSpec& spec, RngStream& rng) {
  spec.validate();
  const int rank = draw_rank(spec.rank_law, rng);
  switch (spec.purity_law) {
    case PurityLaw::ensemble_natural:
      return ginibre_fixed_rank(spec.dim, rank, rng);
    case PurityLaw::uniform_given_rank:
      return draw_uniform_purity(spec.dim, rank, rng).state;
  }
  throw ValidationError("sample_state: unknown purity law");
}

DensityMatrix sample_state(const EnsembleSpec& spec, std::uint64_t index) {
  RngStream rng(spec.seed, index);
  return sample_state(spec, rng);
}

}  // namespace tracebound
