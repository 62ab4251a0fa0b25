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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qccd/config.hpp"
#include "qccd/physics.hpp"
#include "qccd/trace.hpp"

namespace qccd {

struct RouteOutcome {
  MachineGraph machine;
  Circuit circuit;
  ExecutionTrace trace;
  RunMetrics metrics;
};

/// Loads the circuit, places, routes and scores; no files written.
[[nodiscard]] RouteOutcome run_route(const RunConfig& config);

[[nodiscard]] std::string metrics_csv(const RunMetrics& m, std::uint64_t seed);
[[nodiscard]] std::string route_summary(const RouteOutcome& outcome, const RunConfig& config);

struct BenchmarkRow {
  std::string name;
  CircuitMetrics metrics;
};

[[nodiscard]] std::vector<BenchmarkRow> benchmark_stats(const std::vector<std::string>& names, int qubits,
                                                        std::uint64_t seed);
/// Columns circuit, Depth, 2q Gates, Av. 2q-Gates/TS, Av. Ion Mov/TS with
/// ratios rounded to two decimals.
[[nodiscard]] std::string benchmark_stats_csv(const std::vector<BenchmarkRow>& rows, std::uint64_t seed);

/// Writes trace.json, metrics.csv and summary.txt to config.out_dir.
int cmd_route(const RunConfig& config, std::ostream& out);
/// Writes evaluations.csv and best.json to config.out_dir.
int cmd_sweep(const RunConfig& config, std::ostream& out);
/// Writes benchmark-stats.csv to out_dir and echoes it.
int cmd_bench(const std::vector<std::string>& names, int qubits, std::uint64_t seed,
              const std::filesystem::path& out_dir, std::ostream& out);
/// Exit status 0 iff the trace file replays cleanly; otherwise the
/// violated invariant is written to err.
int cmd_validate(const std::filesystem::path& trace_path, std::ostream& out, std::ostream& err);

}  // namespace qccd
