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

#include "tracebound/serialize.hpp"

#include <cmath>
#include <iterator>

#include <fmt/format.h>

namespace tracebound {

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

nlohmann::json real_or_null(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

void write_csv(std::ostream& os, const std::vector<SampleRecord>& records) {
  os << kCsvHeader << '\n';
  fmt::memory_buffer line;
  for (const SampleRecord& r : records) {
    line.clear();
    fmt::format_to(std::back_inserter(line),
                   "{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{}\n",
                   r.index, r.d, r.rank_rho, r.rank_sigma, r.reduced_rank, r.trace_distance, r.hs_distance,
                   r.q_ratio, r.upper_theorem1, r.upper_norm_equiv, r.upper_rank_sum, r.upper_entropy_p2,
                   r.upper_entropy_p3, bool_text(r.lemma1_ok), bool_text(r.weyl_ok));
    os.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

nlohmann::json to_json(const SampleRecord& r) {
  return nlohmann::json{
      {"index", r.index},
      {"d", r.d},
      {"rank_rho", r.rank_rho},
      {"rank_sigma", r.rank_sigma},
      {"R", r.reduced_rank},
      {"trace_dist", r.trace_distance},
      {"hs_dist", r.hs_distance},
      {"Q", real_or_null(r.q_ratio)},
      {"ub_theorem1", r.upper_theorem1},
      {"ub_norm_equiv", r.upper_norm_equiv},
      {"ub_rank_sum", r.upper_rank_sum},
      {"ub_entropy_p2", r.upper_entropy_p2},
      {"ub_entropy_p3", r.upper_entropy_p3},
      {"lemma1_ok", r.lemma1_ok},
      {"weyl_ok", r.weyl_ok},
  };
}

nlohmann::json to_json(const ExperimentSummary& s) {
  nlohmann::json failures = nlohmann::json::array();
  for (const Violation& v : s.failures) {
    failures.push_back({{"dim", v.dim}, {"index", v.index}, {"seed", v.seed}, {"what", v.what}});
  }
  return nlohmann::json{
      {"n_samples", s.n_samples},
      {"violations", s.violations},
      {"max_q_over_r", s.max_q_over_r},
      {"min_q", s.min_q},
      {"runtime_seconds", s.runtime_seconds},
      {"seed", s.seed},
      {"redraws", s.redraws},
      {"failures", std::move(failures)},
  };
}

nlohmann::json to_json(const ExampleRow& row) {
  nlohmann::json j{{"family", to_string(row.family)}, {"d", row.d}, {"r", row.r}, {"s", row.s}, {"skipped", row.skipped}};
  if (row.skipped) {
    j["reason"] = row.skip_reason;
    return j;
  }
  j["R"] = row.reduced_rank;
  j["trace_dist"] = row.trace_distance;
  j["hs_dist"] = row.hs_distance;
  j["Q"] = real_or_null(row.q_ratio);
  j["expected_trace_dist"] = row.expected_trace_distance;
  j["expected_hs_dist"] = row.expected_hs_distance;
  j["expected_Q"] = row.expected_q_ratio;
  j["max_residual"] = row.max_residual();
  return j;
}

nlohmann::json to_json(const CounterexampleSearch& search) {
  nlohmann::json j{{"status", search.exhausted() ? "exhausted" : "found"},
                   {"candidates_tried", search.candidates_tried},
                   {"skipped_pure_rho", search.skipped_pure_rho}};
  if (search.found) {
    const Counterexample& c = *search.found;
    j["dim"] = c.dim;
    j["seed"] = c.seed;
    j["index"] = c.index;
    j["kind"] = to_string(c.kind);
    j["margin"] = c.margin;
  }
  return j;
}

void write_json(std::ostream& os, const std::vector<SampleRecord>& records, const ExperimentSummary& summary) {
  nlohmann::json recs = nlohmann::json::array();
  for (const SampleRecord& r : records) recs.push_back(to_json(r));
  const nlohmann::json doc{{"records", std::move(recs)}, {"summary", to_json(summary)}};
  os << doc.dump(2) << '\n';
}

void write_examples_table(std::ostream& os, const std::vector<ExampleRow>& rows) {
  os << fmt::format("{:>10} {:>4} {:>4} {:>4} {:>12} {:>12} {:>12} {:>12} {:>10}\n", "family", "d", "r", "s", "R", "D",
                    "D_HS", "Q", "residual");
  for (const ExampleRow& row : rows) {
    if (row.skipped) {
      os << fmt::format("{:>10} {:>4} {:>4} {:>4}  skipped: {}\n", to_string(row.family), row.d, row.r, row.s,
                        row.skip_reason);
      continue;
    }
    os << fmt::format("{:>10} {:>4} {:>4} {:>4} {:>12.8f} {:>12.8f} {:>12.8f} {:>12.8f} {:>10.2e}\n", to_string(row.family),
                      row.d, row.r, row.s, row.reduced_rank, row.trace_distance, row.hs_distance, row.q_ratio,
                      row.max_residual());
  }
}

std::string summary_line(const ExperimentSummary& s) {
  return fmt::format("n_samples={} violations={} redraws={} min_q={} max_q_over_r={} seed={} runtime_s={:.3f}",
                     s.n_samples, s.violations, s.redraws, format_real(s.min_q), format_real(s.max_q_over_r), s.seed,
                     s.runtime_seconds);
}

}  // namespace tracebound
