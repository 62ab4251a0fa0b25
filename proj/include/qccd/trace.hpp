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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qccd/circuit.hpp"
#include "qccd/ion_config.hpp"
#include "qccd/topology.hpp"

namespace qccd {

/// Adjacent exchange inside one chain; `moving` steps toward a chain end.
struct SwapRecord {
  TrapId trap;
  QubitId moving;
  QubitId displaced;
  bool operator==(const SwapRecord&) const = default;
};

struct ShuttleRecord {
  QubitId qubit;
  TrapId from;
  TrapId to;
  JunctionId junction;
  bool operator==(const ShuttleRecord&) const = default;
};

struct GateRecord {
  std::size_t gate = 0;
  TrapId trap;
  bool operator==(const GateRecord&) const = default;
};

using Operation = std::variant<SwapRecord, ShuttleRecord, GateRecord>;

enum class RoundKind { Shuttle, Gate };

/// Operations of one time step. Ops run concurrently across traps; the
/// listed order is the serial order inside each trap.
struct Round {
  RoundKind kind = RoundKind::Gate;
  std::vector<Operation> ops;
};

struct ExecutionTrace {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;
  IonConfiguration initial;
  std::vector<Round> rounds;

  [[nodiscard]] std::size_t shuttle_count() const;
  [[nodiscard]] std::size_t swap_count() const;
  [[nodiscard]] std::size_t gate_round_count() const;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hooks called while a trace is replayed; `config` is the state after
/// the operation was applied.
class ReplayObserver {
 public:
  virtual ~ReplayObserver() = default;
  virtual void begin_round(const Round&) {}
  virtual void on_swap(const SwapRecord&, const IonConfiguration&) {}
  virtual void on_shuttle(const ShuttleRecord&, const IonConfiguration&) {}
  virtual void on_gate(const GateRecord&, const Gate&, const IonConfiguration&) {}
  virtual void end_round(const Round&) {}
};

struct ReplayReport {
  IonConfiguration final_config;
  /// Largest occupancy - capacity seen at any point, including inside
  /// shuttle rounds.
  int peak_overfill = 0;
  std::size_t gates_executed = 0;
};

/// Replays the trace from its initial configuration and checks every
/// invariant: adjacent swaps, shuttles leaving from the junction-facing
/// end over a junction joining the recorded traps, no junction or qubit
/// used twice in one shuttle round, gates co-located in their recorded
/// trap, at most one two-qubit gate per trap per round, dependency order,
/// each gate at most once, and trap capacity at the initial state, after
/// every gate round and at the end. Throws ValidationError naming the
/// first violation.
ReplayReport replay_trace(const MachineGraph& machine, const ExecutionTrace& trace,
                          ReplayObserver* observer = nullptr, bool require_complete = true);

}  // namespace qccd
