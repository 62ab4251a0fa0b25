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

#include "qccd/scoring.hpp"

#include <algorithm>
#include <stdexcept>

namespace qccd {

void ScoreWeights::validate() const {
  for (double v : {alpha_shuttle, lambda_swap, beta_future, sigma_capacity, gamma_parallel})
    if (!(v >= 0.0)) throw std::invalid_argument("score weights must be non-negative");
  if (lookahead_layers < 1) throw std::invalid_argument("lookahead_layers must be at least 1");
}

double weighted_total(const TrapScore& s, const ScoreWeights& w) {
  return -w.alpha_shuttle * s.shuttles - w.lambda_swap * s.swaps + w.beta_future * s.future_ops +
         w.sigma_capacity * s.excess_capacity + w.gamma_parallel * s.parallelism;
}

TrapScore with_total(TrapScore s, const ScoreWeights& w) {
  s.total = weighted_total(s, w);
  return s;
}

Lookahead::Lookahead(const GateDag& dag, const std::vector<bool>& executed, int window)
    : window_(window), entries_(dag.num_qubits()) {
  std::vector<int> next_free(dag.num_qubits(), 0);
  for (const Gate& g : dag.gates()) {
    if (executed[g.id] || !g.two_qubit()) continue;
    auto a = g.qubits[0].index();
    auto b = g.qubits[1].index();
    int layer = std::max(next_free[a], next_free[b]);
    next_free[a] = next_free[b] = layer + 1;
    add(layer, g.qubits[0], g.qubits[1]);
  }
}

void Lookahead::add(int layer, QubitId a, QubitId b) {
  if (layer < 1 || layer > window_) return;
  entries_.at(a.index()).push_back({layer, b});
  entries_.at(b.index()).push_back({layer, a});
}

double future_ops_score(QubitId q, TrapId trap, const Lookahead& lookahead, const IonConfiguration& config,
                        std::span<const QubitId> assumed_in_trap) {
  double score = 0.0;
  for (const auto& e : lookahead.entries(q)) {
    bool present = std::find(assumed_in_trap.begin(), assumed_in_trap.end(), e.partner) != assumed_in_trap.end() ||
                   config.trap_of(e.partner) == trap;
    if (present) score += lookahead.window() - e.layer;
  }
  return score;
}

MovementCounts single_ion_movement(QubitId q, std::span<const TrapId> path, const MachineGraph& machine,
                                   const IonConfiguration& config) {
  MovementCounts m;
  if (path.size() < 2) return m;
  m.shuttles = static_cast<int>(path.size() - 1);
  m.swaps = static_cast<int>(config.distance_to_end(q, machine.exit_end(path[0], path[1])));
  for (std::size_t i = 1; i + 1 < path.size(); ++i) m.swaps += config.occupancy(path[i]);
  return m;
}

MovementCounts movement_counts(QubitId q1, QubitId q2, const TrapPath& path, TrapId target,
                               const MachineGraph& machine, const IonConfiguration& config) {
  auto it = std::find(path.begin(), path.end(), target);
  if (it == path.end()) throw std::invalid_argument("target trap is not on the path");
  std::size_t k = static_cast<std::size_t>(it - path.begin());
  std::vector<TrapId> backward(path.rbegin(), path.rend() - static_cast<std::ptrdiff_t>(k));
  MovementCounts a = single_ion_movement(q1, std::span<const TrapId>(path.data(), k + 1), machine, config);
  MovementCounts b = single_ion_movement(q2, backward, machine, config);
  return {a.shuttles + b.shuttles, a.swaps + b.swaps};
}

int excess_capacity_score(int capacity, int occupancy, int incoming) {
  int free = capacity - occupancy - incoming;
  if (free > 0) return free;
  if (free < 0) return -capacity;
  return 0;
}

int excess_capacity_score(TrapId trap, const MachineGraph& machine, const IonConfiguration& config, int incoming) {
  return excess_capacity_score(machine.capacity(trap), config.occupancy(trap), incoming);
}

TrapScore trap_score(QubitId q1, QubitId q2, TrapId trap, const TrapPath& path, const MachineGraph& machine,
                     const IonConfiguration& config, const Lookahead& lookahead, bool trap_busy,
                     const ScoreWeights& w) {
  TrapScore s;
  MovementCounts m = movement_counts(q1, q2, path, trap, machine, config);
  s.shuttles = m.shuttles;
  s.swaps = m.swaps;
  const QubitId pair[] = {q1, q2};
  s.future_ops = future_ops_score(q1, trap, lookahead, config, pair) + future_ops_score(q2, trap, lookahead, config, pair);
  int incoming = (config.trap_of(q1) != trap) + (config.trap_of(q2) != trap);
  s.excess_capacity = excess_capacity_score(trap, machine, config, incoming);
  s.parallelism = parallelism_score(trap_busy);
  return with_total(s, w);
}

double bottleneck_score(QubitId q, std::span<const TrapId> path, const MachineGraph& machine,
                        const IonConfiguration& config, const Lookahead& lookahead) {
  MovementCounts m = single_ion_movement(q, path, machine, config);
  const QubitId self[] = {q};
  double fo = path.empty() ? 0.0 : future_ops_score(q, path.back(), lookahead, config, self);
  return -m.shuttles - m.swaps + fo;
}

}  // namespace qccd
