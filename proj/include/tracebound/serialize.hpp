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

#ifndef TRACEBOUND_SERIALIZE_HPP
#define TRACEBOUND_SERIALIZE_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tracebound/experiments.hpp"

namespace tracebound {

inline constexpr std::string_view kCsvHeader =
    "index,d,rank_rho,rank_sigma,R,trace_dist,hs_dist,Q,ub_theorem1,ub_norm_equiv,ub_rank_sum,"
    "ub_entropy_p2,ub_entropy_p3,lemma1_ok,weyl_ok";

/// 17 significant digits; round-trips every double.
std::string format_real(double x);

/// Header line, then one line per record, '\n' terminated.
void write_csv(std::ostream& os, const std::vector<SampleRecord>& records);

nlohmann::json to_json(const SampleRecord& rec);
nlohmann::json to_json(const ExperimentSummary& summary);
nlohmann::json to_json(const ExampleRow& row);
nlohmann::json to_json(const CounterexampleSearch& search);

/// {"records": [...], "summary": {...}}
void write_json(std::ostream& os, const std::vector<SampleRecord>& records, const ExperimentSummary& summary);

/// Fixed-width text table of closed-form comparisons.
void write_examples_table(std::ostream& os, const std::vector<ExampleRow>& rows);

/// key=value line, e.g. "n_samples=100 violations=0 ...".
std::string summary_line(const ExperimentSummary& summary);

}  // namespace tracebound

#endif  // TRACEBOUND_SERIALIZE_HPP
