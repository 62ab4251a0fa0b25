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

#include <algorithm>
#include <numeric>

#include "qccd/router.hpp"

namespace qccd {

std::string to_string(PlacementStrategy s) { return s == PlacementStrategy::Greedy ? "greedy" : "sequential"; }

PlacementStrategy placement_strategy_from_string(const std::string& name) {
  if (name == "sequential") return PlacementStrategy::Sequential;
  if (name == "greedy") return PlacementStrategy::Greedy;
  throw std::invalid_argument("unknown placement strategy '" + name + "'");
}

namespace {

TrapId roomiest_trap(const MachineGraph& machine, const std::vector<std::vector<QubitId>>& chains, int needed) {
  std::optional<TrapId> best;
  int best_free = 0;
  for (const Trap& t : machine.traps()) {
    int free = t.capacity - static_cast<int>(chains[t.id.index()].size());
    if (free >= needed && (!best || free > best_free)) {
      best = t.id;
      best_free = free;
    }
  }
  if (!best) throw CapacityError("no trap has room for the placement");
  return *best;
}

}  // namespace

IonConfiguration initial_placement(const GateDag& dag, const MachineGraph& machine, PlacementStrategy strategy) {
  const std::size_t n = dag.num_qubits();
  if (n > static_cast<std::size_t>(machine.total_capacity()))
    throw CapacityError(std::to_string(n) + " qubits exceed the machine capacity of " +
                        std::to_string(machine.total_capacity()));
  std::vector<std::vector<QubitId>> chains(machine.num_traps());

  if (strategy == PlacementStrategy::Sequential) {
    std::size_t t = 0;
    for (std::size_t q = 0; q < n; ++q) {
      while (static_cast<int>(chains[t].size()) >= machine.traps()[t].capacity) ++t;
      chains[t].push_back(QubitId(q));
    }
    return IonConfiguration::from_chains(std::move(chains), n);
  }

  std::vector<bool> placed(n, false);
  for (const Gate& g : dag.gates()) {
    if (!g.two_qubit() || dag.layer(g.id) != 0) continue;
    auto a = g.qubits[0].index();
    auto b = g.qubits[1].index();
    if (placed[a] || placed[b]) continue;
    std::optional<TrapId> t;
    try {
      t = roomiest_trap(machine, chains, 2);
    } catch (const CapacityError&) {
      break;
    }
    chains[t->index()].push_back(g.qubits[0]);
    chains[t->index()].push_back(g.qubits[1]);
    placed[a] = placed[b] = true;
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (placed[q]) continue;
    chains[roomiest_trap(machine, chains, 1).index()].push_back(QubitId(q));
  }
  return IonConfiguration::from_chains(std::move(chains), n);
}

void apply_move(IonConfiguration& config, const MachineGraph& machine, const PlannedMove& move) {
  for (std::size_t i = 0; i + 1 < move.path.size(); ++i) {
    const Junction& j = machine.junction(*machine.junction_between(move.path[i], move.path[i + 1]));
    config.remove(move.qubit);
    config.insert(move.qubit, move.path[i + 1], j.end_at(move.path[i + 1]));
  }
}

}  // namespace qccd
