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

#include "qccd/trace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qccd {
namespace {

template <class T>
std::size_t count_ops(const std::vector<Round>& rounds) {
  std::size_t n = 0;
  for (const Round& r : rounds)
    for (const Operation& op : r.ops) n += std::holds_alternative<T>(op);
  return n;
}

[[noreturn]] void fail(std::size_t round, const std::string& what) {
  std::ostringstream os;
  os << "round " << round << ": " << what;
  throw ValidationError(os.str());
}

void check_capacity(const MachineGraph& machine, const IonConfiguration& config, std::size_t round,
                    const char* when) {
  for (const Trap& t : machine.traps()) {
    if (config.occupancy(t.id) > t.capacity) {
      std::ostringstream os;
      os << "capacity exceeded " << when << ": trap " << t.id << " holds " << config.occupancy(t.id)
         << " ions, capacity " << t.capacity;
      fail(round, os.str());
    }
  }
}

}  // namespace

std::size_t ExecutionTrace::shuttle_count() const { return count_ops<ShuttleRecord>(rounds); }
std::size_t ExecutionTrace::swap_count() const { return count_ops<SwapRecord>(rounds); }
std::size_t ExecutionTrace::gate_round_count() const {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [](const Round& r) { return r.kind == RoundKind::Gate; }));
}

ReplayReport replay_trace(const MachineGraph& machine, const ExecutionTrace& trace, ReplayObserver* observer,
                          bool require_complete) {
  if (trace.initial.num_traps() != machine.num_traps())
    throw ValidationError("initial placement does not match the machine's trap count");
  if (trace.initial.num_qubits() != trace.num_qubits)
    throw ValidationError("initial placement does not match the qubit count");

  GateDag dag(Circuit{trace.num_qubits, trace.gates});
  IonConfiguration config = trace.initial;
  ReplayReport report;
  report.peak_overfill = config.max_overfill(machine);
  check_capacity(machine, config, 0, "in the initial placement");
  std::vector<bool> executed(trace.gates.size(), false);

  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const Round& round = trace.rounds[r];
    if (observer) observer->begin_round(round);
    std::set<JunctionId> junctions_used;
    std::set<QubitId> qubits_shuttled;
    std::set<TrapId> traps_with_2q;

    for (const Operation& op : round.ops) {
      if (const auto* s = std::get_if<SwapRecord>(&op)) {
        if (round.kind != RoundKind::Shuttle) fail(r, "swap inside a gate round");
        if (s->trap.index() >= machine.num_traps()) fail(r, "swap in unknown trap");
        if (s->moving.index() >= trace.num_qubits || s->displaced.index() >= trace.num_qubits)
          fail(r, "swap on unknown qubit");
        if (config.trap_of(s->moving) != s->trap || config.trap_of(s->displaced) != s->trap)
          fail(r, "swap operands not in the recorded trap");
        std::size_t a = config.position_of(s->moving);
        std::size_t b = config.position_of(s->displaced);
        if (a + 1 != b && b + 1 != a) fail(r, "swap between non-adjacent ions");
        config.swap_adjacent(s->trap, std::min(a, b));
        if (observer) observer->on_swap(*s, config);
      } else if (const auto* m = std::get_if<ShuttleRecord>(&op)) {
        if (round.kind != RoundKind::Shuttle) fail(r, "shuttle inside a gate round");
        if (m->junction.index() >= machine.junctions().size()) fail(r, "shuttle over unknown junction");
        if (m->qubit.index() >= trace.num_qubits) fail(r, "shuttle of unknown qubit");
        const Junction& j = machine.junction(m->junction);
        bool joins = (j.a == m->from && j.b == m->to) || (j.b == m->from && j.a == m->to);
        if (!joins) fail(r, "junction does not connect the recorded traps");
        if (!junctions_used.insert(m->junction).second) fail(r, "junction used twice in one round");
        if (!qubits_shuttled.insert(m->qubit).second) fail(r, "qubit shuttled twice in one round");
        if (config.trap_of(m->qubit) != m->from) fail(r, "shuttled qubit is not in the origin trap");
        if (config.distance_to_end(m->qubit, j.end_at(m->from)) != 0)
          fail(r, "shuttled qubit is not at the junction end of its chain");
        config.remove(m->qubit);
        config.insert(m->qubit, m->to, j.end_at(m->to));
        report.peak_overfill = std::max(report.peak_overfill, config.max_overfill(machine));
        if (observer) observer->on_shuttle(*m, config);
      } else {
        const auto& g = std::get<GateRecord>(op);
        if (round.kind != RoundKind::Gate) fail(r, "gate inside a shuttle round");
        if (g.gate >= trace.gates.size()) fail(r, "unknown gate id");
        if (g.trap.index() >= machine.num_traps()) fail(r, "gate in unknown trap");
        if (executed[g.gate]) fail(r, "gate " + std::to_string(g.gate) + " executed twice");
        for (std::size_t p : dag.predecessors(g.gate))
          if (!executed[p]) fail(r, "gate " + std::to_string(g.gate) + " runs before its dependency " + std::to_string(p));
        const Gate& gate = trace.gates[g.gate];
        for (std::size_t k = 0; k < gate.arity(); ++k)
          if (config.trap_of(gate.qubits[k]) != g.trap)
            fail(r, "gate " + std::to_string(g.gate) + " operands are not co-located in trap " + std::to_string(g.trap.value));
        if (gate.two_qubit() && !traps_with_2q.insert(g.trap).second)
          fail(r, "two two-qubit gates in trap " + std::to_string(g.trap.value));
        executed[g.gate] = true;
        ++report.gates_executed;
        if (observer) observer->on_gate(g, gate, config);
      }
    }
    if (round.kind == RoundKind::Gate) check_capacity(machine, config, r, "at a gate round");
    if (observer) observer->end_round(round);
  }

  check_capacity(machine, config, trace.rounds.size(), "at the end of the trace");
  if (require_complete && report.gates_executed != trace.gates.size())
    throw ValidationError("trace leaves " + std::to_string(trace.gates.size() - report.gates_executed) +
                          " gates unexecuted");
  report.final_config = std::move(config);
  return report;
}

}  // namespace qccd
