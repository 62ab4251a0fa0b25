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

#include <span>
#include <vector>

#include "qccd/circuit.hpp"
#include "qccd/ion_config.hpp"
#include "qccd/topology.hpp"

namespace qccd {

struct ScoreWeights {
  double alpha_shuttle = 1.0;
  double lambda_swap = 1.0;
  double beta_future = 1.0;
  double sigma_capacity = 1.0;
  double gamma_parallel = 1.0;
  double threshold = -350.0;
  int lookahead_layers = 7;

  /// Throws std::invalid_argument for negative weights or L < 1.
  void validate() const;
  bool operator==(const ScoreWeights&) const = default;
};

struct TrapScore {
  int shuttles = 0;
  int swaps = 0;
  double future_ops = 0.0;
  int excess_capacity = 0;
  int parallelism = 0;
  double total = 0.0;
};

/// -α·SH - λ·SW + β·FO + σ·EC + γ·PR over the components of `s`.
[[nodiscard]] double weighted_total(const TrapScore& s, const ScoreWeights& w);
/// Copy of `s` with `total` recomputed.
[[nodiscard]] TrapScore with_total(TrapScore s, const ScoreWeights& w);

/// Unexecuted two-qubit gates near the routing frontier, indexed by qubit.
/// Layers are ASAP over the remaining two-qubit gates, the frontier being
/// layer 0. Only layers 1..window are kept.
class Lookahead {
 public:
  struct Entry {
    int layer = 0;
    QubitId partner;
  };

  Lookahead(std::size_t num_qubits, int window) : window_(window), entries_(num_qubits) {}
  Lookahead(const GateDag& dag, const std::vector<bool>& executed, int window);

  /// Records a gate (a, b) at the given layer; ignored outside 1..window.
  void add(int layer, QubitId a, QubitId b);
  [[nodiscard]] int window() const { return window_; }
  [[nodiscard]] const std::vector<Entry>& entries(QubitId q) const { return entries_.at(q.index()); }

 private:
  int window_;
  std::vector<std::vector<Entry>> entries_;
};

/// Σ_i (L - i) · #{future gates of q in layer i whose partner sits in
/// `trap`}. Qubits listed in `assumed_in_trap` count as present in `trap`
/// regardless of `config`.
[[nodiscard]] double future_ops_score(QubitId q, TrapId trap, const Lookahead& lookahead,
                                      const IonConfiguration& config,
                                      std::span<const QubitId> assumed_in_trap = {});

struct MovementCounts {
  int shuttles = 0;
  int swaps = 0;
  bool operator==(const MovementCounts&) const = default;
};

/// Cost of bringing one ion along `path` (which starts at its trap):
/// hops, plus swaps to reach the exit end of its own chain, plus the
/// occupancy of every intermediate trap.
[[nodiscard]] MovementCounts single_ion_movement(QubitId q, std::span<const TrapId> path,
                                                 const MachineGraph& machine,
                                                 const IonConfiguration& config);

/// SH and SW for meeting at `target`, a trap on `path`. The path runs from
/// the trap of q1 to the trap of q2; q1 travels forward, q2 backward.
[[nodiscard]] MovementCounts movement_counts(QubitId q1, QubitId q2, const TrapPath& path, TrapId target,
                                             const MachineGraph& machine, const IonConfiguration& config);

/// free = capacity - occupancy - incoming; free if positive, -capacity if
/// negative, 0 when exactly full.
[[nodiscard]] int excess_capacity_score(int capacity, int occupancy, int incoming);
[[nodiscard]] int excess_capacity_score(TrapId trap, const MachineGraph& machine,
                                        const IonConfiguration& config, int incoming);

[[nodiscard]] inline int parallelism_score(bool trap_busy) { return trap_busy ? -1 : 1; }

/// Full weighted score of executing gate (q1, q2) in `trap` on `path`.
[[nodiscard]] TrapScore trap_score(QubitId q1, QubitId q2, TrapId trap, const TrapPath& path,
                                   const MachineGraph& machine, const IonConfiguration& config,
                                   const Lookahead& lookahead, bool trap_busy, const ScoreWeights& w);

/// Unweighted -SH - SW + FO for relocating q along `path` (starting at its
/// trap); FO is taken toward the last trap of the path.
[[nodiscard]] double bottleneck_score(QubitId q, std::span<const TrapId> path, const MachineGraph& machine,
                                      const IonConfiguration& config, const Lookahead& lookahead);

}  // namespace qccd
