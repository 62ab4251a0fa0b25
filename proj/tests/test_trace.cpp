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

#include <nlohmann/json.hpp>

#include "qccd/physics.hpp"
#include "qccd/rng.hpp"
#include "qccd/router.hpp"
#include "qccd/trace.hpp"
#include "qccd/trace_json.hpp"

using namespace qccd;
using Catch::Matchers::ContainsSubstring;

namespace {

IonConfiguration chains(std::initializer_list<std::initializer_list<int>> traps, std::size_t n) {
  std::vector<std::vector<QubitId>> c;
  for (auto t : traps) {
    c.emplace_back();
    for (int q : t) c.back().push_back(QubitId(q));
  }
  return IonConfiguration::from_chains(std::move(c), n);
}

ShuttleRecord hop(const MachineGraph& g, int q, int from, int to) {
  return {QubitId(q), TrapId(from), TrapId(to), *g.junction_between(TrapId(from), TrapId(to))};
}

GateRecord at(std::size_t gate, int trap) { return {gate, TrapId(trap)}; }

Round shuttle_round(std::vector<Operation> ops) { return {RoundKind::Shuttle, std::move(ops)}; }
Round gate_round(std::vector<Operation> ops) { return {RoundKind::Gate, std::move(ops)}; }

ExecutionTrace make_trace(std::size_t qubits, std::initializer_list<std::pair<int, int>> pairs, IonConfiguration initial) {
  Circuit c{qubits, {}};
  for (auto [a, b] : pairs) c.add(GateType::CX, a, b);
  ExecutionTrace t;
  t.num_qubits = qubits;
  t.gates = c.gates;
  t.initial = std::move(initial);
  return t;
}

void expect_invalid(const MachineGraph& g, const ExecutionTrace& t, const std::string& message) {
  CHECK_THROWS_WITH(replay_trace(g, t), ContainsSubstring(message));
}

}  // namespace

TEST_CASE("a hand-written trace replays", "[trace]") {
  auto g = build_linear(2, 3);
  auto t = make_trace(4, {{0, 1}, {1, 2}}, chains({{0, 3, 1}, {2}}, 4));
  t.rounds = {gate_round({at(0, 0)}), shuttle_round({hop(g, 1, 0, 1)}), gate_round({at(1, 1)})};
  auto report = replay_trace(g, t);
  CHECK(report.gates_executed == 2);
  CHECK(report.final_config == chains({{0, 3}, {1, 2}}, 4));
  CHECK(t.shuttle_count() == 1);
  CHECK(t.swap_count() == 0);
  CHECK(t.gate_round_count() == 2);
}

TEST_CASE("corrupted traces are rejected", "[trace]") {
  auto g = build_linear(2, 3);
  auto t = make_trace(4, {{0, 1}, {1, 2}}, chains({{0, 3, 1}, {2}}, 4));

  SECTION("operands apart") {
    t.rounds = {gate_round({at(0, 0)}), gate_round({at(1, 1)})};
    expect_invalid(g, t, "operands are not co-located");
  }
  SECTION("non-adjacent swap") {
    t.rounds = {shuttle_round({SwapRecord{TrapId(0), QubitId(0), QubitId(1)}})};
    expect_invalid(g, t, "swap between non-adjacent ions");
  }
  SECTION("departure from the far end") {
    t.rounds = {shuttle_round({hop(g, 0, 0, 1)})};
    expect_invalid(g, t, "not at the junction end");
  }
  SECTION("junction reused in a round") {
    t.rounds = {shuttle_round({hop(g, 1, 0, 1), hop(g, 2, 1, 0)})};
    expect_invalid(g, t, "junction used twice in one round");
  }
  SECTION("dependency order") {
    auto dep = make_trace(4, {{0, 1}, {0, 1}}, chains({{0, 3, 1}, {2}}, 4));
    dep.rounds = {gate_round({at(1, 0)}), gate_round({at(0, 0)})};
    expect_invalid(g, dep, "runs before its dependency");
  }
  SECTION("gate executed twice") {
    t.rounds = {gate_round({at(0, 0)}), gate_round({at(0, 0)})};
    expect_invalid(g, t, "executed twice");
  }
  SECTION("missing gates") {
    t.rounds = {gate_round({at(0, 0)})};
    expect_invalid(g, t, "gates unexecuted");
    CHECK(replay_trace(g, t, nullptr, false).gates_executed == 1);
  }
  SECTION("ops in the wrong kind of round") {
    t.rounds = {gate_round({hop(g, 1, 0, 1)})};
    expect_invalid(g, t, "shuttle inside a gate round");
    t.rounds = {shuttle_round({at(0, 0)})};
    expect_invalid(g, t, "gate inside a shuttle round");
    t.rounds = {gate_round({SwapRecord{TrapId(0), QubitId(3), QubitId(1)}})};
    expect_invalid(g, t, "swap inside a gate round");
  }
  SECTION("unknown ids") {
    t.rounds = {gate_round({at(7, 0)})};
    expect_invalid(g, t, "unknown gate id");
    t.rounds = {shuttle_round({ShuttleRecord{QubitId(1), TrapId(0), TrapId(1), JunctionId(5)}})};
    expect_invalid(g, t, "unknown junction");
  }
  SECTION("junction that does not join the traps") {
    auto g3 = build_linear(3, 3);
    auto t3 = make_trace(3, {{0, 1}}, chains({{0}, {1}, {2}}, 3));
    t3.rounds = {shuttle_round({ShuttleRecord{QubitId(0), TrapId(0), TrapId(2), JunctionId(0)}})};
    expect_invalid(g3, t3, "does not connect");
  }
}

TEST_CASE("a qubit may cross only one junction per round", "[trace]") {
  auto g = build_linear(3, 3);
  auto t = make_trace(3, {{0, 2}}, chains({{0}, {1}, {2}}, 3));
  t.rounds = {shuttle_round({hop(g, 0, 0, 1), hop(g, 0, 1, 2)})};
  expect_invalid(g, t, "qubit shuttled twice in one round");
}

TEST_CASE("at most one two-qubit gate per trap and round", "[trace]") {
  auto g = build_linear(1, 4);
  auto t = make_trace(4, {{0, 1}, {2, 3}}, chains({{0, 1, 2, 3}}, 4));
  t.rounds = {gate_round({at(0, 0), at(1, 0)})};
  expect_invalid(g, t, "two two-qubit gates");
  t.rounds = {gate_round({at(0, 0)}), gate_round({at(1, 0)})};
  CHECK_NOTHROW(replay_trace(g, t));
}

TEST_CASE("capacity binds at gate rounds, not inside shuttle rounds", "[trace]") {
  auto g = build_linear(2, 2);
  auto t = make_trace(4, {{2, 3}}, chains({{0, 1}, {2, 3}}, 4));
  t.rounds = {shuttle_round({hop(g, 1, 0, 1)}), gate_round({at(0, 1)})};
  expect_invalid(g, t, "capacity exceeded at a gate round");

  // Ion 1 enters at the front and leaves again from the front.
  t.rounds = {shuttle_round({hop(g, 1, 0, 1)}), shuttle_round({hop(g, 1, 1, 0)}), gate_round({at(0, 1)})};
  auto report = replay_trace(g, t);
  CHECK(report.peak_overfill == 1);
  t.rounds = {shuttle_round({hop(g, 1, 0, 1)})};
  expect_invalid(g, t, "at the end of the trace");

  auto bad = make_trace(3, {}, chains({{0, 1, 2}, {}}, 3));
  expect_invalid(g, bad, "initial placement");
}

TEST_CASE("trace documents round-trip", "[trace][json]") {
  Rng rng(31);
  PhysicsParams physics;
  for (int i = 0; i < 20; ++i) {
    auto g = i % 2 ? build_ring(4, 3) : build_grid(2, 3, 3);
    Circuit c = generate_random(8, 6, 0.5, rng.next());
    c.add(GateType::RZ, 3, 0.25);
    c.add(GateType::CP, 1, 6, -1.5);
    GateDag dag(c);
    auto trace = route(dag, g, ScoreWeights{});
    auto metrics = accumulate_fidelity(g, trace, physics);
    auto doc = trace_to_json(trace, g, physics, metrics, 77);
    CHECK(doc["version"] == kTraceFormatVersion);
    CHECK(doc["seed"] == 77);
    REQUIRE(doc["rounds"].size() == trace.rounds.size());

    auto loaded = trace_from_json(doc.dump());
    CHECK(machine_to_json(loaded.machine) == machine_to_json(g));
    CHECK(loaded.trace.num_qubits == trace.num_qubits);
    CHECK(loaded.trace.initial == trace.initial);
    REQUIRE(loaded.trace.gates.size() == trace.gates.size());
    for (std::size_t k = 0; k < trace.gates.size(); ++k) {
      CHECK(loaded.trace.gates[k].type == trace.gates[k].type);
      CHECK(loaded.trace.gates[k].qubits == trace.gates[k].qubits);
      CHECK(loaded.trace.gates[k].angle == trace.gates[k].angle);
    }
    REQUIRE(loaded.trace.rounds.size() == trace.rounds.size());
    for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
      CHECK(loaded.trace.rounds[r].kind == trace.rounds[r].kind);
      CHECK(loaded.trace.rounds[r].ops == trace.rounds[r].ops);
    }
    auto again = accumulate_fidelity(loaded.machine, loaded.trace, physics);
    CHECK(again.total_fidelity == metrics.total_fidelity);
    CHECK(again.exec_time_us == metrics.exec_time_us);
  }
}

TEST_CASE("malformed trace documents are rejected", "[trace][json]") {
  auto g = build_linear(2, 3);
  auto t = make_trace(4, {{0, 1}}, chains({{0, 3, 1}, {2}}, 4));
  t.rounds = {gate_round({at(0, 0)})};
  auto doc = trace_to_json(t, g, PhysicsParams{}, accumulate_fidelity(g, t, PhysicsParams{}), 1);

  CHECK_THROWS_AS(trace_from_json("{not json"), ValidationError);
  auto wrong_version = doc;
  wrong_version["version"] = 99;
  CHECK_THROWS_WITH(trace_from_json(wrong_version.dump()), ContainsSubstring("version"));
  auto no_rounds = doc;
  no_rounds.erase("rounds");
  CHECK_THROWS_AS(trace_from_json(no_rounds.dump()), ValidationError);
  auto odd_op = doc;
  odd_op["rounds"][0]["ops"][0]["op"] = "teleport";
  CHECK_THROWS_WITH(trace_from_json(odd_op.dump()), ContainsSubstring("teleport"));
  auto odd_gate = doc;
  odd_gate["circuit"]["gates"][0]["name"] = "toffoli";
  CHECK_THROWS_AS(trace_from_json(odd_gate.dump()), ValidationError);
  auto bad_placement = doc;
  bad_placement["initial_placement"][0][0] = 2;
  CHECK_THROWS_AS(trace_from_json(bad_placement.dump()), ValidationError);
}
