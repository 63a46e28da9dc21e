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

#include "tracebound/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <omp.h>

#include "tracebound/experiments.hpp"
#include "tracebound/serialize.hpp"

namespace tracebound {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--dim", cfg.dim, "Hilbert space dimension")->capture_default_str();
  sub->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  sub->add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  sub->add_flag("--serial", cfg.serial, "Run the serial reference loops");
}

void add_output_options(CLI::App* sub, CliConfig& cfg) {
  static const std::map<std::string, OutputFormat> formats{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
  sub->add_option("--out", cfg.out_path, "Output file (default: standard output)");
  sub->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();
}

void require_dim(const CliConfig& cfg, int lo, int hi) {
  if (cfg.dim < lo || cfg.dim > hi) {
    throw UsageError(fmt::format("{}: --dim must be in [{}, {}], got {}", cfg.command, lo, hi, cfg.dim));
  }
}

// Opens --out when given; otherwise results go to `fallback`.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : stream_(&fallback) {
    if (path) {
      file_.open(*path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError(fmt::format("cannot open output file '{}'", *path));
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void report_failures(const ExperimentSummary& s, std::ostream& err) {
  for (const Violation& v : s.failures) {
    err << fmt::format("violation: dim={} index={} seed={}: {}\n", v.dim, v.index, v.seed, v.what);
  }
}

int run_figure1_command(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  require_dim(cfg, 4, 64);
  const Execution exec = cfg.serial ? Execution::serial : Execution::parallel;
  const Figure1Result res = run_figure1(cfg.dim, cfg.samples, cfg.seed, exec, cfg.rank_tol);
  Sink sink(cfg.out_path, out);
  if (cfg.format == OutputFormat::json) {
    write_json(sink.get(), res.records, res.summary);
  } else {
    write_csv(sink.get(), res.records);
  }
  sink.get().flush();
  err << "figure1 d=" << cfg.dim << ' ' << summary_line(res.summary) << '\n';
  report_failures(res.summary, err);
  return res.summary.violations == 0 ? exit_code::ok : exit_code::violation;
}

int run_examples_command(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  require_dim(cfg, 4, 64);
  const std::vector<ExampleRow> rows = examples_table(cfg.dim);
  double worst = 0.0;
  for (const ExampleRow& row : rows) worst = std::max(worst, row.max_residual());
  const bool ok = worst <= 1e-10;

  Sink sink(cfg.out_path, out);
  if (cfg.format == OutputFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ExampleRow& row : rows) arr.push_back(to_json(row));
    sink.get() << nlohmann::json{{"rows", std::move(arr)}, {"max_residual", worst}}.dump(2) << '\n';
  } else {
    write_examples_table(sink.get(), rows);
    sink.get() << fmt::format("examples d={} rows={} max_residual={:.3e} violations={}\n", cfg.dim, rows.size(),
                              worst, ok ? 0 : 1);
  }
  if (!ok) err << fmt::format("violation: closed-form residual {:.3e} exceeds 1e-10\n", worst);
  return ok ? exit_code::ok : exit_code::violation;
}

int run_verify_command(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  require_dim(cfg, 1, 64);
  SweepOptions opt;
  opt.rank_tol = cfg.rank_tol;
  opt.exec = cfg.serial ? Execution::serial : Execution::parallel;
  const ExperimentSummary s = verify_sweep({cfg.dim}, cfg.samples, cfg.seed, opt);
  Sink sink(cfg.out_path, out);
  if (cfg.format == OutputFormat::json) {
    sink.get() << to_json(s).dump(2) << '\n';
  } else {
    sink.get() << "verify d=" << cfg.dim << ' ' << summary_line(s) << '\n';
  }
  report_failures(s, err);
  return s.violations == 0 ? exit_code::ok : exit_code::violation;
}

int run_counterexample_command(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_dim(cfg, 2, 64);
  const Execution exec = cfg.serial ? Execution::serial : Execution::parallel;
  const CounterexampleSearch res = find_conjecture_counterexample(cfg.dim, cfg.budget, cfg.seed, exec);
  Sink sink(cfg.out_path, out);
  if (cfg.format == OutputFormat::json) {
    sink.get() << to_json(res).dump(2) << '\n';
  } else if (res.found) {
    const Counterexample& c = *res.found;
    sink.get() << fmt::format("counterexample d={} seed={} status=found index={} kind={} margin={} tried={}\n", c.dim,
                              c.seed, c.index, to_string(c.kind), format_real(c.margin), res.candidates_tried);
  } else {
    sink.get() << fmt::format("counterexample d={} seed={} status=exhausted tried={} skipped_pure_rho={}\n", cfg.dim,
                              cfg.seed, res.candidates_tried, res.skipped_pure_rho);
  }
  return exit_code::ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace distance vs Hilbert-Schmidt distance: bounds, sampling and verification"};
  app.name("tracebound");
  app.require_subcommand(1);

  CliConfig cfg;
  CLI::App* figure1 = app.add_subcommand("figure1", "Q = D^2/D_HS scatter for random pairs, as CSV or JSON");
  CLI::App* examples = app.add_subcommand("examples", "Closed-form projector examples against computed values");
  CLI::App* verify = app.add_subcommand("verify", "Check every bound and certificate on random pairs");
  CLI::App* counter = app.add_subcommand("counterexample", "Search for D^2 > D_HS/Tr(rho^2)");

  for (CLI::App* sub : {figure1, examples, verify, counter}) {
    add_common_options(sub, cfg);
    add_output_options(sub, cfg);
  }
  for (CLI::App* sub : {figure1, verify}) {
    sub->add_option("--samples", cfg.samples, "Number of state pairs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--rank-tol", cfg.rank_tol, "Relative eigenvalue cutoff for numerical rank")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
  counter->add_option("--budget", cfg.budget, "Number of candidate pairs")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    CLI::App* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << active->help();
    return exit_code::usage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  cfg.command = chosen->get_name();
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    if (chosen == figure1) return run_figure1_command(cfg, out, err);
    if (chosen == examples) return run_examples_command(cfg, out, err);
    if (chosen == verify) return run_verify_command(cfg, out, err);
    return run_counterexample_command(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << chosen->help();
    return exit_code::usage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace tracebound
