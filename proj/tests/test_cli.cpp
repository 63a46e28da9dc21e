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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <omp.h>

#include "tracebound/cli.hpp"
#include "tracebound/experiments.hpp"

using namespace tracebound;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tracebound");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int saved = omp_get_max_threads();
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  omp_set_num_threads(saved);
  return Run{code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string f; std::getline(in, f, sep);) v.push_back(f);
  return v;
}

}  // namespace

TEST_CASE("figure1 writes a CSV with header and one row per pair") {
  const Run r = run({"figure1", "--dim", "8", "--samples", "25", "--seed", "3"});
  CHECK(r.code == exit_code::ok);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 26);
  CHECK(rows[0] ==
        "index,d,rank_rho,rank_sigma,R,trace_dist,hs_dist,Q,ub_theorem1,ub_norm_equiv,ub_rank_sum,ub_entropy_p2,"
        "ub_entropy_p3,lemma1_ok,weyl_ok");
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto f = split(rows[i], ',');
    REQUIRE(f.size() == 15);
    CHECK(f[1] == "8");
    CHECK(f[13] == "true");
    CHECK(f[14] == "true");
  }
  CHECK(r.err.find("violations=0") != std::string::npos);
}

TEST_CASE("figure1 CSV values round-trip to the in-memory records") {
  const Run r = run({"figure1", "--dim", "8", "--samples", "30", "--seed", "12"});
  REQUIRE(r.code == exit_code::ok);
  const Figure1Result res = run_figure1(8, 30, 12);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == res.records.size() + 1);
  for (size_t i = 0; i < res.records.size(); ++i) {
    const auto f = split(rows[i + 1], ',');
    const SampleRecord& rec = res.records[i];
    CHECK(std::stoull(f[0]) == rec.index);
    CHECK(std::stod(f[4]) == rec.reduced_rank);
    CHECK(std::stod(f[5]) == rec.trace_distance);
    CHECK(std::stod(f[6]) == rec.hs_distance);
    CHECK(std::stod(f[7]) == rec.q_ratio);
    CHECK(std::stod(f[8]) == rec.upper_theorem1);
    CHECK(std::stod(f[12]) == rec.upper_entropy_p3);
  }
}

TEST_CASE("figure1 output is identical across thread settings") {
  const std::vector<std::string> base = {"figure1", "--dim", "12", "--samples", "60", "--seed", "7"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> a = base;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a).out;
  };
  const std::string def = with({});
  CHECK(def == with({}));
  CHECK(def == with({"--serial"}));
  CHECK(def == with({"--threads", "1"}));
  CHECK(def == with({"--threads", "4"}));
  CHECK(def != run({"figure1", "--dim", "12", "--samples", "60", "--seed", "8"}).out);
}

TEST_CASE("figure1 --out and --format json") {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / "tracebound_cli_test.json";
  const Run r = run({"figure1", "--dim", "4", "--samples", "5", "--format", "json", "--out", path.string()});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const nlohmann::json j = nlohmann::json::parse(in);
  CHECK(j.at("records").size() == 5);
  CHECK(j.at("summary").at("n_samples") == 5);
  CHECK(j.at("summary").at("violations") == 0);
  CHECK(j.at("records")[0].at("d") == 4);
  std::filesystem::remove(path);
}

TEST_CASE("examples subcommand") {
  const Run r = run({"examples", "--dim", "8"});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out.find("examples d=8 rows=36") != std::string::npos);
  CHECK(r.out.find("violations=0") != std::string::npos);

  const Run j = run({"examples", "--dim", "4", "--format", "json"});
  CHECK(j.code == exit_code::ok);
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("rows").size() == 4 + 6);
  CHECK(parsed.at("max_residual").get<double>() <= 1e-10);
}

TEST_CASE("verify subcommand") {
  const Run r = run({"verify", "--dim", "4", "--samples", "100", "--seed", "9"});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out.find("verify d=4") != std::string::npos);
  CHECK(r.out.find("violations=0") != std::string::npos);
  CHECK(run({"verify", "--dim", "1", "--samples", "10"}).code == exit_code::ok);
}

TEST_CASE("counterexample subcommand") {
  const Run found = run({"counterexample", "--dim", "8", "--budget", "1000", "--seed", "3"});
  CHECK(found.code == exit_code::ok);
  CHECK(found.out.find("status=found") != std::string::npos);
  CHECK(found.out.find("kind=flat_shift") != std::string::npos);

  const Run none = run({"counterexample", "--dim", "2", "--budget", "1"});
  CHECK(none.code == exit_code::ok);
  CHECK(none.out.find("status=exhausted tried=1") != std::string::npos);

  const Run j = run({"counterexample", "--dim", "8", "--budget", "1000", "--seed", "3", "--format", "json"});
  const nlohmann::json parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.at("status") == "found");
  CHECK(parsed.at("margin").get<double>() > 0.0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"figure1", "--bogus"}).code == exit_code::usage);
  CHECK(run({"nonsense"}).code == exit_code::usage);
  CHECK(run({"figure1", "--dim", "3", "--samples", "2"}).code == exit_code::usage);
  CHECK(run({"figure1", "--dim", "65", "--samples", "2"}).code == exit_code::usage);
  CHECK(run({"figure1", "--samples", "0"}).code == exit_code::usage);
  CHECK(run({"figure1", "--format", "xml"}).code == exit_code::usage);
  CHECK(run({"verify", "--dim", "0"}).code == exit_code::usage);
  CHECK(run({"counterexample", "--dim", "1"}).code == exit_code::usage);
  const Run bad = run({"figure1", "--dim", "abc"});
  CHECK(bad.code == exit_code::usage);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const Run r = run({"--help"});
  CHECK(r.code == exit_code::ok);
  CHECK(r.out.find("figure1") != std::string::npos);
}
