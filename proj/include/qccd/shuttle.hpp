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
#include <span>
#include <vector>

#include "qccd/ion_config.hpp"
#include "qccd/topology.hpp"
#include "qccd/trace.hpp"

namespace qccd {

/// A committed relocation of one ion along a trap path.
struct PlannedMove {
  QubitId qubit;
  TrapPath path;
};

/// A single trap-to-trap hop.
struct ShuttleOp {
  std::size_t op_id = 0;
  QubitId qubit;
  TrapId from;
  TrapId to;
  JunctionId junction;
};

/// Conflict graph over hops: an edge joins every pair of ops that move the
/// same ion or cross the same junction, directed from the earlier-recorded
/// op to the later one.
class ShuttleDag {
 public:
  explicit ShuttleDag(std::vector<ShuttleOp> ops);

  [[nodiscard]] std::size_t size() const { return ops_.size(); }
  [[nodiscard]] const std::vector<ShuttleOp>& ops() const { return ops_; }
  [[nodiscard]] const std::vector<std::size_t>& predecessors(std::size_t i) const { return preds_.at(i); }
  [[nodiscard]] const std::vector<std::size_t>& successors(std::size_t i) const { return succs_.at(i); }
  [[nodiscard]] std::size_t edge_count() const;
  /// Number of distinct levels, i.e. the op count of the longest chain.
  [[nodiscard]] std::size_t level_count() const;

 private:
  std::vector<ShuttleOp> ops_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
};

/// One op per hop, numbered in recording order.
[[nodiscard]] ShuttleDag decompose_moves(std::span<const PlannedMove> moves, const MachineGraph& machine);

/// Repeated source extraction: round k holds the ops whose predecessors
/// all lie in earlier rounds. Each round lists op indices in ascending order.
[[nodiscard]] std::vector<std::vector<std::size_t>> extract_rounds(const ShuttleDag& dag);

/// Applies the ops of one round in order to `config`. Each ion is first
/// swapped to the chain end facing its junction, then leaves and joins the
/// destination chain at the end facing the same junction. Returns the
/// emitted swap and shuttle records.
std::vector<Operation> expand_swaps(std::span<const ShuttleOp> round, const MachineGraph& machine,
                                    IonConfiguration& config);

}  // namespace qccd
