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

#include "qccd/trace_json.hpp"

#include <cmath>

namespace qccd {

using nlohmann::json;

namespace {

const char* end_name(ChainEnd e) { return e == ChainEnd::Front ? "front" : "back"; }

ChainEnd end_from_name(const std::string& s) {
  if (s == "front") return ChainEnd::Front;
  if (s == "back") return ChainEnd::Back;
  throw ValidationError("unknown chain end '" + s + "'");
}

json number_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

GateType gate_type_from_name(const std::string& name) {
  for (GateType t : {GateType::H, GateType::X, GateType::RZ, GateType::CX, GateType::CP, GateType::CZ, GateType::SWAP})
    if (gate_name(t) == name) return t;
  throw ValidationError("unknown gate '" + name + "'");
}

}  // namespace

json machine_to_json(const MachineGraph& machine) {
  json traps = json::array();
  for (const Trap& t : machine.traps()) traps.push_back({{"id", t.id.value}, {"capacity", t.capacity}});
  json junctions = json::array();
  for (const Junction& j : machine.junctions())
    junctions.push_back({{"id", j.id.value},
                         {"a", j.a.value},
                         {"b", j.b.value},
                         {"end_at_a", end_name(j.end_at_a)},
                         {"end_at_b", end_name(j.end_at_b)}});
  return {{"kind", to_string(machine.kind())}, {"traps", traps}, {"junctions", junctions}};
}

MachineGraph machine_from_json(const json& j) {
  std::vector<Trap> traps;
  for (const json& t : j.at("traps")) traps.push_back({TrapId(t.at("id").get<std::uint32_t>()), t.at("capacity").get<int>()});
  std::vector<Junction> junctions;
  for (const json& e : j.at("junctions"))
    junctions.push_back({JunctionId(e.at("id").get<std::uint32_t>()), TrapId(e.at("a").get<std::uint32_t>()),
                         TrapId(e.at("b").get<std::uint32_t>()), end_from_name(e.at("end_at_a").get<std::string>()),
                         end_from_name(e.at("end_at_b").get<std::string>())});
  return MachineGraph(topology_kind_from_string(j.at("kind").get<std::string>()), std::move(traps),
                      std::move(junctions));
}

json weights_to_json(const ScoreWeights& w) {
  return {{"alpha_shuttle", w.alpha_shuttle},   {"lambda_swap", w.lambda_swap},
          {"beta_future", w.beta_future},       {"sigma_capacity", w.sigma_capacity},
          {"gamma_parallel", w.gamma_parallel}, {"threshold", number_or_string(w.threshold)},
          {"lookahead_layers", w.lookahead_layers}};
}

json metrics_to_json(const RunMetrics& m) {
  return {{"shuttles", m.shuttle_count},
          {"swaps", m.swap_count},
          {"gates", m.gate_count},
          {"rounds", m.rounds},
          {"depth", m.depth},
          {"exec_time_us", m.exec_time_us},
          {"gate_fidelity", m.gate_fidelity_product},
          {"coherence", m.coherence_factor},
          {"fidelity", m.total_fidelity},
          {"peak_overfill", m.peak_overfill},
          {"heat", m.heat}};
}

json trace_to_json(const ExecutionTrace& trace, const MachineGraph& machine, const PhysicsParams& physics,
                   const RunMetrics& metrics, std::uint64_t seed) {
  json gates = json::array();
  for (const Gate& g : trace.gates) {
    json q = json::array();
    for (std::size_t k = 0; k < g.arity(); ++k) q.push_back(g.qubits[k].value);
    json entry = {{"id", g.id}, {"name", gate_name(g.type)}, {"qubits", q}};
    if (has_angle(g.type)) entry["angle"] = g.angle;
    gates.push_back(std::move(entry));
  }
  json placement = json::array();
  for (const auto& chain : trace.initial.chains()) {
    json c = json::array();
    for (QubitId q : chain) c.push_back(q.value);
    placement.push_back(std::move(c));
  }
  json rounds = json::array();
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const Round& round = trace.rounds[r];
    json ops = json::array();
    for (const Operation& op : round.ops) {
      double d = op_duration(op, trace.gates, physics);
      if (const auto* s = std::get_if<SwapRecord>(&op)) {
        ops.push_back({{"op", "swap"}, {"trap", s->trap.value}, {"qubits", {s->moving.value, s->displaced.value}},
                       {"duration_us", d}});
      } else if (const auto* m = std::get_if<ShuttleRecord>(&op)) {
        ops.push_back({{"op", "shuttle"}, {"qubit", m->qubit.value}, {"from", m->from.value}, {"to", m->to.value},
                       {"junction", m->junction.value}, {"duration_us", d}});
      } else {
        const auto& g = std::get<GateRecord>(op);
        const Gate& gate = trace.gates.at(g.gate);
        json q = json::array();
        for (std::size_t k = 0; k < gate.arity(); ++k) q.push_back(gate.qubits[k].value);
        ops.push_back({{"op", "gate"}, {"gate", g.gate}, {"name", gate_name(gate.type)}, {"qubits", q},
                       {"trap", g.trap.value}, {"duration_us", d}});
      }
    }
    rounds.push_back({{"index", r},
                      {"kind", round.kind == RoundKind::Shuttle ? "shuttle" : "gate"},
                      {"duration_us", round_duration(round, trace.gates, physics)},
                      {"ops", std::move(ops)}});
  }
  return {{"version", kTraceFormatVersion},
          {"seed", seed},
          {"machine", machine_to_json(machine)},
          {"circuit", {{"num_qubits", trace.num_qubits}, {"gates", gates}}},
          {"initial_placement", placement},
          {"rounds", rounds},
          {"metrics", metrics_to_json(metrics)}};
}

LoadedTrace trace_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("trace is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != kTraceFormatVersion) throw ValidationError("unsupported trace version");
    MachineGraph machine = machine_from_json(doc.at("machine"));
    ExecutionTrace trace;
    trace.num_qubits = doc.at("circuit").at("num_qubits").get<std::size_t>();
    Circuit circuit{trace.num_qubits, {}};
    for (const json& g : doc.at("circuit").at("gates")) {
      GateType type = gate_type_from_name(g.at("name").get<std::string>());
      const json& q = g.at("qubits");
      double angle = g.value("angle", 0.0);
      if (q.size() != (is_two_qubit(type) ? 2u : 1u)) throw ValidationError("gate operand count mismatch");
      if (g.at("id").get<std::size_t>() != circuit.gates.size()) throw ValidationError("gate ids must be dense and ordered");
      try {
        if (is_two_qubit(type))
          circuit.add(type, QubitId(q[0].get<std::uint32_t>()), QubitId(q[1].get<std::uint32_t>()), angle);
        else
          circuit.add(type, QubitId(q[0].get<std::uint32_t>()), angle);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(std::string("bad gate: ") + e.what());
      }
    }
    trace.gates = std::move(circuit.gates);

    std::vector<std::vector<QubitId>> chains;
    for (const json& c : doc.at("initial_placement")) {
      chains.emplace_back();
      for (const json& q : c) chains.back().push_back(QubitId(q.get<std::uint32_t>()));
    }
    try {
      trace.initial = IonConfiguration::from_chains(std::move(chains), trace.num_qubits);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(std::string("bad initial placement: ") + e.what());
    }

    for (const json& r : doc.at("rounds")) {
      Round round;
      std::string kind = r.at("kind").get<std::string>();
      if (kind == "shuttle")
        round.kind = RoundKind::Shuttle;
      else if (kind == "gate")
        round.kind = RoundKind::Gate;
      else
        throw ValidationError("unknown round kind '" + kind + "'");
      for (const json& op : r.at("ops")) {
        std::string name = op.at("op").get<std::string>();
        if (name == "swap") {
          const json& q = op.at("qubits");
          if (q.size() != 2) throw ValidationError("swap needs two qubits");
          round.ops.emplace_back(SwapRecord{TrapId(op.at("trap").get<std::uint32_t>()),
                                            QubitId(q[0].get<std::uint32_t>()), QubitId(q[1].get<std::uint32_t>())});
        } else if (name == "shuttle") {
          round.ops.emplace_back(ShuttleRecord{QubitId(op.at("qubit").get<std::uint32_t>()),
                                               TrapId(op.at("from").get<std::uint32_t>()),
                                               TrapId(op.at("to").get<std::uint32_t>()),
                                               JunctionId(op.at("junction").get<std::uint32_t>())});
        } else if (name == "gate") {
          round.ops.emplace_back(
              GateRecord{op.at("gate").get<std::size_t>(), TrapId(op.at("trap").get<std::uint32_t>())});
        } else {
          throw ValidationError("unknown op kind '" + name + "'");
        }
      }
      trace.rounds.push_back(std::move(round));
    }
    return {std::move(machine), std::move(trace)};
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed trace: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("malformed trace: ") + e.what());
  }
}

}  // namespace qccd
