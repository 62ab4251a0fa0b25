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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qccd/circuit.hpp"
#include "qccd/ion_config.hpp"
#include "qccd/scoring.hpp"
#include "qccd/shuttle.hpp"
#include "qccd/topology.hpp"
#include "qccd/trace.hpp"

namespace qccd {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PlacementStrategy { Sequential, Greedy };

std::string to_string(PlacementStrategy s);
PlacementStrategy placement_strategy_from_string(const std::string& name);

/// Sequential fills traps in id order with qubits in index order. Greedy
/// first pairs up the partners of first-layer two-qubit gates, giving each
/// pair the trap with the most free slots, then spreads the rest the same
/// way. Throws CapacityError if the qubits do not fit.
[[nodiscard]] IonConfiguration initial_placement(const GateDag& dag, const MachineGraph& machine,
                                                 PlacementStrategy strategy = PlacementStrategy::Sequential);

/// Moves each ion hop by hop: it leaves from the chain end facing the
/// junction and joins the next chain at the end facing the same junction.
void apply_move(IonConfiguration& config, const MachineGraph& machine, const PlannedMove& move);

struct BottleneckResolution {
  bool feasible = false;
  /// Single-hop relocations in execution order.
  std::vector<PlannedMove> moves;
  int shuttles = 0;
  int swaps = 0;
  double score = 0.0;
};

/// Frees one slot in `trap` by pushing ions toward the nearest traps with
/// a free slot. Every shortest path to such a trap is tried; walking back
/// from the free end, each trap on the path hands its best-scoring movable
/// ion one hop forward. The path with the highest summed score wins.
/// Infeasible when every path meets a trap without movable ions.
[[nodiscard]] BottleneckResolution resolve_bottleneck(TrapId trap, const MachineGraph& machine,
                                                      const IonConfiguration& config,
                                                      const Lookahead& lookahead,
                                                      const std::vector<bool>& immovable);

/// State of the slice being built.
struct SliceView {
  const MachineGraph& machine;
  const IonConfiguration& config;
  const Lookahead& lookahead;
  const std::vector<bool>& busy_traps;
  const std::vector<bool>& reserved_qubits;
};

struct Candidate {
  std::size_t gate = 0;
  TrapId trap;
  TrapScore score;
  /// Bottleneck relocations followed by the operand paths.
  std::vector<PlannedMove> moves;
};

enum class Decision { Commit, Defer, Infeasible };

struct TrapSelection {
  Decision decision = Decision::Infeasible;
  std::optional<Candidate> best;
};

/// Scores every trap on every shortest path between the operands and picks
/// the best feasible one (ties: lowest trap id). Commits when its score
/// reaches the threshold and the trap has no gate in this slice yet.
[[nodiscard]] TrapSelection select_trap(const Gate& gate, const SliceView& slice, const ScoreWeights& weights);

/// Routes the whole circuit and returns the round-by-round schedule.
[[nodiscard]] ExecutionTrace route(const GateDag& dag, const MachineGraph& machine, const ScoreWeights& weights,
                                   const IonConfiguration& initial);
[[nodiscard]] ExecutionTrace route(const GateDag& dag, const MachineGraph& machine, const ScoreWeights& weights,
                                   PlacementStrategy placement = PlacementStrategy::Sequential);

}  // namespace qccd
