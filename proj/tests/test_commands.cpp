// Copyright 2026 The qccd-route Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qccd/commands.hpp"
#include "qccd/trace_json.hpp"

using namespace qccd;
using Catch::Matchers::ContainsSubstring;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("qccd_commands_" + name);
  fs::remove_all(dir);
  return dir;
}

RunConfig qft8(const fs::path& out) {
  auto cfg = parse_config(R"(
seed = 5
[topology]
kind = "linear"
traps = 4
capacity = 3
[circuit]
generator = "qft"
qubits = 8
[weights]
)");
  cfg.out_dir = out;
  return cfg;
}

}  // namespace

TEST_CASE("route writes artifacts that validate", "[commands]") {
  auto dir = scratch("route");
  std::ostringstream out;
  REQUIRE(cmd_route(qft8(dir), out) == 0);
  CHECK_THAT(out.str(), ContainsSubstring("fidelity"));
  for (const char* f : {"trace.json", "metrics.csv", "summary.txt"}) CHECK(fs::exists(dir / f));

  auto metrics = slurp(dir / "metrics.csv");
  CHECK(metrics.starts_with("# seed=5\nshuttles,swaps,depth,exec_time_us,coherence,fidelity\n"));

  std::ostringstream vout, verr;
  CHECK(cmd_validate(dir / "trace.json", vout, verr) == 0);
  CHECK(verr.str().empty());

  auto doc = nlohmann::json::parse(slurp(dir / "trace.json"));
  CHECK(doc["version"] == kTraceFormatVersion);
  CHECK(doc["seed"] == 5);
  CHECK(doc["rounds"][0].contains("duration_us"));

  auto outcome = run_route(qft8(dir));
  CHECK(metrics == metrics_csv(outcome.metrics, 5));
  fs::remove_all(dir);
}

TEST_CASE("route output is byte-identical across runs", "[commands]") {
  auto a = scratch("repeat_a");
  auto b = scratch("repeat_b");
  std::ostringstream sink;
  cmd_route(qft8(a), sink);
  cmd_route(qft8(b), sink);
  for (const char* f : {"trace.json", "metrics.csv", "summary.txt"}) CHECK(slurp(a / f) == slurp(b / f));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("validate names the broken invariant", "[commands]") {
  auto dir = scratch("corrupt");
  std::ostringstream sink;
  cmd_route(qft8(dir), sink);
  auto doc = nlohmann::json::parse(slurp(dir / "trace.json"));
  // Send the first two-qubit gate to a trap that does not hold its operands.
  bool changed = false;
  for (auto& round : doc["rounds"]) {
    for (auto& op : round["ops"]) {
      if (!changed && op["op"] == "gate" && op["qubits"].size() == 2) {
        op["trap"] = (op["trap"].get<int>() + 2) % 4;
        changed = true;
      }
    }
  }
  REQUIRE(changed);
  std::ofstream(dir / "bad.json") << doc.dump();
  std::ostringstream out, err;
  CHECK(cmd_validate(dir / "bad.json", out, err) == 1);
  CHECK_THAT(err.str(), ContainsSubstring("not co-located"));

  std::ofstream(dir / "garbage.json") << "{\"version\": 1}";
  CHECK(cmd_validate(dir / "garbage.json", out, err) == 1);
  CHECK(cmd_validate(dir / "absent.json", out, err) == 2);
  fs::remove_all(dir);
}

TEST_CASE("route and sweep need their own section", "[commands]") {
  auto cfg = qft8(scratch("sections"));
  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_sweep(cfg, sink), ConfigError);
  cfg.sweep = StagePlan::defaults(1);
  cfg.weights.reset();
  CHECK_THROWS_AS(cmd_route(cfg, sink), ConfigError);
}

TEST_CASE("route reports a missing circuit file", "[commands]") {
  auto cfg = qft8(scratch("missing"));
  cfg.circuit.file = "/nonexistent/circuit.qasm";
  std::ostringstream sink;
  CHECK_THROWS_WITH(cmd_route(cfg, sink), ContainsSubstring("not found"));
}

TEST_CASE("sweep with singleton grids reports that configuration", "[commands]") {
  auto dir = scratch("sweep");
  auto cfg = parse_config(R"(
seed = 2
[topology]
kind = "linear"
traps = 3
capacity = 3
[circuit]
generator = "qft"
qubits = 6
[sweep]
swap_grid = [1]
shuttle_grid = [1]
threshold_grid = [-350]
parallelism_grid = [1]
future_ops_grid = [1]
excess_capacity_grid = [1]
threads = 1
)");
  cfg.out_dir = dir;
  std::ostringstream out;
  REQUIRE(cmd_sweep(cfg, out) == 0);
  auto best = nlohmann::json::parse(slurp(dir / "best.json"));
  CHECK(best["weights"] == weights_to_json(ScoreWeights{}));
  CHECK(best["evaluations"] == 5);
  CHECK(best["stages"].size() == 5);
  auto csv = slurp(dir / "evaluations.csv");
  CHECK(csv.starts_with("# seed=2\nstage,index,"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  fs::remove_all(dir);
}

TEST_CASE("benchmark statistics", "[commands]") {
  auto rows = benchmark_stats({"qft"}, 40, 1);
  auto csv = benchmark_stats_csv(rows, 1);
  CHECK(csv == "# seed=1\ncircuit,Depth,2q Gates,Av. 2q-Gates/TS,Av. Ion Mov/TS\nqft,77,780,10.13,19.74\n");

  auto dir = scratch("bench");
  std::ostringstream out;
  REQUIRE(cmd_bench({"qft", "draper"}, 40, 1, dir, out) == 0);
  auto file = slurp(dir / "benchmark-stats.csv");
  CHECK(file == out.str());
  CHECK_THAT(file, ContainsSubstring("draper,95,590,"));
  CHECK_THROWS(benchmark_stats({"grover"}, 40, 1));
  fs::remove_all(dir);
}

TEST_CASE("summary text", "[commands]") {
  auto cfg = qft8(scratch("summary"));
  auto outcome = run_route(cfg);
  auto text = route_summary(outcome, cfg);
  CHECK_THAT(text, ContainsSubstring("8 qubits"));
  CHECK_THAT(text, ContainsSubstring("shuttles        " + std::to_string(outcome.metrics.shuttle_count)));
}
