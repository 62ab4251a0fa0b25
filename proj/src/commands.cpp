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

#include "qccd/commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qccd/router.hpp"
#include "qccd/sweep.hpp"
#include "qccd/trace_json.hpp"

namespace qccd {
namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

std::filesystem::path prepare(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

RouteOutcome run_route(const RunConfig& config) {
  if (!config.weights) throw ConfigError("route needs a [weights] section");
  MachineGraph machine = config.topology.build();
  Circuit circuit = config.circuit.load(config.seed);
  GateDag dag(circuit);
  IonConfiguration initial = initial_placement(dag, machine, config.placement);
  ExecutionTrace trace = route(dag, machine, *config.weights, initial);
  RunMetrics metrics = accumulate_fidelity(machine, trace, config.physics);
  return {std::move(machine), std::move(circuit), std::move(trace), std::move(metrics)};
}

std::string metrics_csv(const RunMetrics& m, std::uint64_t seed) {
  std::ostringstream os;
  os << "# seed=" << seed << '\n'
     << "shuttles,swaps,depth,exec_time_us,coherence,fidelity\n"
     << m.shuttle_count << ',' << m.swap_count << ',' << m.depth << ',' << general(m.exec_time_us) << ','
     << general(m.coherence_factor) << ',' << general(m.total_fidelity) << '\n';
  return os.str();
}

std::string route_summary(const RouteOutcome& o, const RunConfig& config) {
  std::ostringstream os;
  const RunMetrics& m = o.metrics;
  os << "seed            " << config.seed << '\n'
     << "topology        " << to_string(o.machine.kind()) << ", " << o.machine.num_traps() << " traps, "
     << o.machine.total_capacity() << " slots\n"
     << "circuit         " << o.circuit.num_qubits << " qubits, " << o.circuit.gates.size() << " gates ("
     << o.circuit.two_qubit_count() << " two-qubit)\n"
     << "rounds          " << m.rounds << " (" << m.depth << " gate rounds)\n"
     << "shuttles        " << m.shuttle_count << '\n'
     << "swaps           " << m.swap_count << '\n'
     << "exec time       " << general(m.exec_time_us) << " us\n"
     << "gate fidelity   " << general(m.gate_fidelity_product) << '\n'
     << "coherence       " << general(m.coherence_factor) << '\n'
     << "fidelity        " << general(m.total_fidelity) << '\n';
  return os.str();
}

std::vector<BenchmarkRow> benchmark_stats(const std::vector<std::string>& names, int qubits, std::uint64_t seed) {
  std::vector<BenchmarkRow> rows;
  for (const std::string& name : names) rows.push_back({name, compute_metrics(GateDag(generate_benchmark(name, qubits, seed)))});
  return rows;
}

std::string benchmark_stats_csv(const std::vector<BenchmarkRow>& rows, std::uint64_t seed) {
  std::ostringstream os;
  os << "# seed=" << seed << '\n' << "circuit,Depth,2q Gates,Av. 2q-Gates/TS,Av. Ion Mov/TS\n";
  for (const BenchmarkRow& r : rows)
    os << r.name << ',' << r.metrics.depth << ',' << r.metrics.two_q_count << ',' << fixed(r.metrics.avg_2q_per_ts, 2)
       << ',' << fixed(r.metrics.avg_ion_mov_per_ts, 2) << '\n';
  return os.str();
}

int cmd_route(const RunConfig& config, std::ostream& out) {
  RouteOutcome o = run_route(config);
  auto dir = prepare(config.out_dir);
  write_file(dir / "trace.json", trace_to_json(o.trace, o.machine, config.physics, o.metrics, config.seed).dump(1) + "\n");
  write_file(dir / "metrics.csv", metrics_csv(o.metrics, config.seed));
  std::string summary = route_summary(o, config);
  write_file(dir / "summary.txt", summary);
  out << summary;
  return 0;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  if (!config.sweep) throw ConfigError("sweep needs a [sweep] section");
  MachineGraph machine = config.topology.build();
  Circuit circuit = config.circuit.load(config.seed);
  GateDag dag(circuit);
  SweepBench bench{dag, machine, initial_placement(dag, machine, config.placement), config.physics};
  SweepResult result = staged_optimize(*config.sweep, bench, config.threads);

  auto dir = prepare(config.out_dir);
  write_file(dir / "evaluations.csv", "# seed=" + std::to_string(config.seed) + "\n" + evaluations_csv(result));
  nlohmann::json stages = nlohmann::json::array();
  for (const StageSummary& s : result.stages)
    stages.push_back({{"stage", to_string(s.stage)},
                      {"best_fidelity", s.best_fidelity},
                      {"no_impact", s.no_impact},
                      {"retained", s.retained.size()}});
  nlohmann::json best = {{"seed", config.seed},
                         {"weights", weights_to_json(result.best.weights)},
                         {"metrics", metrics_to_json(result.best.metrics)},
                         {"evaluations", result.evaluations.size()},
                         {"stages", stages}};
  write_file(dir / "best.json", best.dump(1) + "\n");

  out << "evaluations     " << result.evaluations.size() << '\n';
  for (const StageSummary& s : result.stages)
    out << to_string(s.stage) << ": best fidelity " << general(s.best_fidelity) << (s.no_impact ? " (no impact)" : "")
        << '\n';
  const ScoreWeights& w = result.best.weights;
  out << "best weights    alpha=" << general(w.alpha_shuttle) << " lambda=" << general(w.lambda_swap)
      << " beta=" << general(w.beta_future) << " sigma=" << general(w.sigma_capacity)
      << " gamma=" << general(w.gamma_parallel) << " threshold=" << general(w.threshold) << '\n';
  return 0;
}

int cmd_bench(const std::vector<std::string>& names, int qubits, std::uint64_t seed,
              const std::filesystem::path& out_dir, std::ostream& out) {
  std::string csv = benchmark_stats_csv(benchmark_stats(names, qubits, seed), seed);
  write_file(prepare(out_dir) / "benchmark-stats.csv", csv);
  out << csv;
  return 0;
}

int cmd_validate(const std::filesystem::path& trace_path, std::ostream& out, std::ostream& err) {
  std::ifstream in(trace_path);
  if (!in) {
    err << "error: trace file not found: " << trace_path.string() << '\n';
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    LoadedTrace loaded = trace_from_json(buf.str());
    ReplayReport report = replay_trace(loaded.machine, loaded.trace);
    out << "valid: " << loaded.trace.rounds.size() << " rounds, " << report.gates_executed << " gates, "
        << loaded.trace.shuttle_count() << " shuttles, " << loaded.trace.swap_count() << " swaps\n";
    return 0;
  } catch (const ValidationError& e) {
    err << "invalid trace: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace qccd
