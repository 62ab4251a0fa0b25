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
#include <set>

#include "qccd/router.hpp"

namespace qccd {
namespace {

bool better(const Candidate& a, const Candidate& b) {
  if (a.score.total != b.score.total) return a.score.total > b.score.total;
  if (a.trap != b.trap) return a.trap < b.trap;
  return a.gate < b.gate;
}

}  // namespace

TrapSelection select_trap(const Gate& gate, const SliceView& slice, const ScoreWeights& weights) {
  const MachineGraph& machine = slice.machine;
  const IonConfiguration& config = slice.config;
  const QubitId q1 = gate.qubits[0];
  const QubitId q2 = gate.qubits[1];
  const TrapId t1 = config.trap_of(q1);
  const TrapId t2 = config.trap_of(q2);

  std::vector<bool> immovable = slice.reserved_qubits;
  immovable[q1.index()] = immovable[q2.index()] = true;

  std::vector<TrapPath> paths = t1 == t2 ? std::vector<TrapPath>{{t1}} : machine.all_shortest_paths(t1, t2);
  TrapSelection result;
  for (const TrapPath& path : paths) {
    for (std::size_t k = 0; k < path.size(); ++k) {
      Candidate c;
      c.gate = gate.id;
      c.trap = path[k];
      c.score = trap_score(q1, q2, c.trap, path, machine, config, slice.lookahead,
                           slice.busy_traps[c.trap.index()], weights);

      int incoming = (t1 != c.trap) + (t2 != c.trap);
      int need = config.occupancy(c.trap) + incoming - machine.capacity(c.trap);
      bool feasible = true;
      if (need > 0) {
        IonConfiguration scratch = config;
        if (t1 != c.trap) scratch.remove(q1);
        if (t2 != c.trap) scratch.remove(q2);
        for (int r = 0; r < need && feasible; ++r) {
          BottleneckResolution res = resolve_bottleneck(c.trap, machine, scratch, slice.lookahead, immovable);
          feasible = res.feasible;
          if (!feasible) break;
          c.score.shuttles += res.shuttles;
          c.score.swaps += res.swaps;
          for (PlannedMove& m : res.moves) {
            apply_move(scratch, machine, m);
            c.moves.push_back(std::move(m));
          }
        }
        c.score = with_total(c.score, weights);
      }
      if (!feasible) continue;

      if (k > 0) c.moves.push_back({q1, TrapPath(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(k) + 1)});
      if (k + 1 < path.size())
        c.moves.push_back({q2, TrapPath(path.rbegin(), path.rend() - static_cast<std::ptrdiff_t>(k))});
      if (!result.best || better(c, *result.best)) result.best = std::move(c);
    }
  }

  if (!result.best)
    result.decision = Decision::Infeasible;
  else if (result.best->score.total >= weights.threshold && !slice.busy_traps[result.best->trap.index()])
    result.decision = Decision::Commit;
  else
    result.decision = Decision::Defer;
  return result;
}

ExecutionTrace route(const GateDag& dag, const MachineGraph& machine, const ScoreWeights& weights,
                     PlacementStrategy placement) {
  return route(dag, machine, weights, initial_placement(dag, machine, placement));
}

ExecutionTrace route(const GateDag& dag, const MachineGraph& machine, const ScoreWeights& weights,
                     const IonConfiguration& initial) {
  weights.validate();
  if (initial.num_traps() != machine.num_traps() || initial.num_qubits() != dag.num_qubits())
    throw std::invalid_argument("initial placement does not match the machine or circuit");
  if (initial.max_overfill(machine) > 0) throw CapacityError("initial placement exceeds trap capacity");

  ExecutionTrace trace;
  trace.num_qubits = dag.num_qubits();
  trace.gates = dag.gates();
  trace.initial = initial;

  IonConfiguration config = initial;
  std::vector<bool> executed(dag.size(), false);
  std::vector<std::size_t> waiting(dag.size());
  std::set<std::size_t> ready;
  for (std::size_t g = 0; g < dag.size(); ++g) {
    waiting[g] = dag.predecessors(g).size();
    if (waiting[g] == 0) ready.insert(g);
  }
  std::size_t remaining = dag.size();
  auto finish = [&](std::size_t g) {
    executed[g] = true;
    --remaining;
    ready.erase(g);
    for (std::size_t s : dag.successors(g))
      if (--waiting[s] == 0) ready.insert(s);
  };

  while (remaining > 0) {
    std::vector<std::size_t> single_qubit;
    for (bool drained = true; drained;) {
      drained = false;
      for (auto it = ready.begin(); it != ready.end();) {
        std::size_t g = *it++;
        if (dag.gate(g).two_qubit()) continue;
        single_qubit.push_back(g);
        finish(g);
        drained = true;
        it = ready.upper_bound(g);
      }
    }

    Lookahead lookahead(dag, executed, weights.lookahead_layers);
    std::vector<bool> busy(machine.num_traps(), false);
    std::vector<bool> reserved(dag.num_qubits(), false);
    std::vector<std::size_t> candidates(ready.begin(), ready.end());
    std::vector<std::pair<std::size_t, TrapId>> committed;
    std::vector<PlannedMove> slice_moves;
    const IonConfiguration before = config;

    while (!candidates.empty()) {
      SliceView view{machine, config, lookahead, busy, reserved};
      std::optional<Candidate> best_commit;
      std::optional<Candidate> best_any;
      for (std::size_t g : candidates) {
        TrapSelection sel = select_trap(dag.gate(g), view, weights);
        if (!sel.best) continue;
        if (!best_any || better(*sel.best, *best_any)) best_any = sel.best;
        if (sel.decision == Decision::Commit && (!best_commit || better(*sel.best, *best_commit)))
          best_commit = sel.best;
      }
      bool forced = false;
      if (!best_commit) {
        if (!committed.empty()) break;
        if (!best_any)
          throw RoutingError("no feasible trap for any executable gate (gate " + std::to_string(candidates.front()) + ")");
        best_commit = best_any;
        forced = true;
      }
      const Candidate& c = *best_commit;
      for (const PlannedMove& m : c.moves) {
        apply_move(config, machine, m);
        slice_moves.push_back(m);
      }
      if (config.max_overfill(machine) > 0) throw RoutingError("committed step exceeds trap capacity");
      const Gate& gate = dag.gate(c.gate);
      reserved[gate.qubits[0].index()] = reserved[gate.qubits[1].index()] = true;
      busy[c.trap.index()] = true;
      committed.emplace_back(c.gate, c.trap);
      candidates.erase(std::find(candidates.begin(), candidates.end(), c.gate));
      if (forced) break;
    }

    IonConfiguration physical = before;
    ShuttleDag shuttles = decompose_moves(slice_moves, machine);
    for (const auto& round_ids : extract_rounds(shuttles)) {
      std::vector<ShuttleOp> ops;
      for (std::size_t i : round_ids) ops.push_back(shuttles.ops()[i]);
      trace.rounds.push_back({RoundKind::Shuttle, expand_swaps(ops, machine, physical)});
    }
    if (physical.max_overfill(machine) > 0) throw RoutingError("shuttle rounds leave a trap over capacity");

    Round gates{RoundKind::Gate, {}};
    for (std::size_t g : single_qubit) gates.ops.emplace_back(GateRecord{g, physical.trap_of(dag.gate(g).qubits[0])});
    for (auto [g, trap] : committed) {
      gates.ops.emplace_back(GateRecord{g, trap});
      finish(g);
    }
    if (!gates.ops.empty()) trace.rounds.push_back(std::move(gates));
    config = std::move(physical);
  }
  return trace;
}

}  // namespace qccd
