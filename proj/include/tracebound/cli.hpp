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

#ifndef TRACEBOUND_CLI_HPP
#define TRACEBOUND_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace tracebound {

enum class OutputFormat { csv, json };

struct CliConfig {
  std::string command;
  int dim = 16;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0;
  double rank_tol = 1e-10;
  std::optional<std::string> out_path;
  OutputFormat format = OutputFormat::csv;
  /// Counterexample search budget.
  std::uint64_t budget = 1000000;
  /// OpenMP threads; 0 keeps the runtime default.
  int threads = 0;
  /// Use the serial reference loops instead of OpenMP.
  bool serial = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int violation = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

/// Entry point behind the `tracebound` executable. Writes results to `out`
/// (or --out), diagnostics to `err`, and returns the process exit code:
/// 0 success, 1 bound violation, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tracebound

#endif  // TRACEBOUND_CLI_HPP
