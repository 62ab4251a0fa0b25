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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qccd/commands.hpp"
#include "qccd/config.hpp"

namespace {

qccd::RunConfig load(const std::string& path, const std::optional<std::uint64_t>& seed,
                     const std::optional<std::string>& out_dir) {
  qccd::RunConfig cfg = qccd::load_config(path);
  if (seed) cfg.seed = *seed;
  if (out_dir) cfg.out_dir = *out_dir;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallelism-aware qubit routing for QCCD trapped-ion machines"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;

  auto* route = app.add_subcommand("route", "Route one circuit with fixed weights");
  route->add_option("--config", config_path, "Run config file")->required()->check(CLI::ExistingFile);
  route->add_option("--seed", seed, "Override the config seed");
  route->add_option("--out-dir", out_dir, "Override the output directory");

  auto* sweep = app.add_subcommand("sweep", "Staged weight sweep");
  sweep->add_option("--config", config_path, "Run config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--seed", seed, "Override the config seed");
  sweep->add_option("--out-dir", out_dir, "Override the output directory");

  std::vector<std::string> circuits{"qft", "qaoa", "cuccaro", "draper", "rnd10", "rnd80"};
  int qubits = 40;
  std::uint64_t bench_seed = 1;
  std::string bench_dir = "out";
  auto* bench = app.add_subcommand("bench", "Structure statistics of the benchmark circuits");
  bench->add_option("--circuits", circuits, "Benchmark names")->delimiter(',');
  bench->add_option("--qubits", qubits, "Qubit count")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Seed for the random benchmarks");
  bench->add_option("--out-dir", bench_dir, "Output directory");

  std::string trace_path;
  auto* validate = app.add_subcommand("validate", "Replay a trace and check every invariant");
  validate->add_option("trace", trace_path, "trace.json")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*route) return qccd::cmd_route(load(config_path, seed, out_dir), std::cout);
    if (*sweep) return qccd::cmd_sweep(load(config_path, seed, out_dir), std::cout);
    if (*bench) return qccd::cmd_bench(circuits, qubits, bench_seed, bench_dir, std::cout);
    if (*validate) return qccd::cmd_validate(trace_path, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
