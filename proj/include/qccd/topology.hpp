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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qccd/ids.hpp"

namespace qccd {

enum class TopologyKind { Linear, Ring, Grid, Custom };

std::string to_string(TopologyKind kind);
TopologyKind topology_kind_from_string(const std::string& name);

/// The two ends of an ion chain. Position 0 is the front.
enum class ChainEnd { Front, Back };

struct Trap {
  TrapId id;
  int capacity = 0;
};

/// A junction links exactly two traps. Each endpoint records which end of
/// that trap's chain faces the junction; ions leave and arrive there.
struct Junction {
  JunctionId id;
  TrapId a;
  TrapId b;
  ChainEnd end_at_a = ChainEnd::Back;
  ChainEnd end_at_b = ChainEnd::Front;

  [[nodiscard]] TrapId other(TrapId t) const { return t == a ? b : a; }
  [[nodiscard]] ChainEnd end_at(TrapId t) const { return t == a ? end_at_a : end_at_b; }
};

/// A trap sequence; consecutive traps are joined by a junction.
using TrapPath = std::vector<TrapId>;

/// Hardware graph of a QCCD device: capacity-bounded traps joined by
/// junctions. Immutable once built.
class MachineGraph {
 public:
  /// Maximum number of paths returned by all_shortest_paths.
  static constexpr std::size_t kMaxShortestPaths = 32;

  /// Validates and builds. Throws std::invalid_argument on self-loops,
  /// duplicate junctions, capacities < 1, unknown trap ids or a
  /// disconnected graph.
  MachineGraph(TopologyKind kind, std::vector<Trap> traps, std::vector<Junction> junctions);

  [[nodiscard]] TopologyKind kind() const { return kind_; }
  [[nodiscard]] std::size_t num_traps() const { return traps_.size(); }
  [[nodiscard]] const std::vector<Trap>& traps() const { return traps_; }
  [[nodiscard]] const std::vector<Junction>& junctions() const { return junctions_; }
  [[nodiscard]] int capacity(TrapId t) const { return traps_.at(t.index()).capacity; }
  [[nodiscard]] int total_capacity() const;
  [[nodiscard]] const Junction& junction(JunctionId j) const { return junctions_.at(j.index()); }

  /// Neighbouring traps in increasing id order.
  [[nodiscard]] std::span<const TrapId> neighbours(TrapId t) const { return adjacency_.at(t.index()); }
  [[nodiscard]] std::optional<JunctionId> junction_between(TrapId a, TrapId b) const;
  /// End of `from`'s chain an ion must reach to cross into `to`.
  [[nodiscard]] ChainEnd exit_end(TrapId from, TrapId to) const;

  /// Hop distances from `source` to every trap (BFS).
  [[nodiscard]] std::vector<int> distances_from(TrapId source) const;
  [[nodiscard]] int distance(TrapId a, TrapId b) const;

  /// All minimum-hop trap sequences from a to b, lexicographic by trap id,
  /// truncated to kMaxShortestPaths. a == b yields the single path [a].
  [[nodiscard]] std::vector<TrapPath> all_shortest_paths(TrapId a, TrapId b) const;

 private:
  TopologyKind kind_;
  std::vector<Trap> traps_;
  std::vector<Junction> junctions_;
  std::vector<std::vector<TrapId>> adjacency_;
  std::vector<std::vector<JunctionId>> junction_index_;  // parallel to adjacency_
  std::vector<std::vector<int>> distance_table_;
};

MachineGraph build_linear(int n_traps, int capacity);
MachineGraph build_ring(int n_traps, int capacity);
MachineGraph build_grid(int rows, int cols, int capacity);

/// Custom topology from explicit capacities and trap pairs. The lower-id
/// endpoint of each junction uses its Back end, the higher-id its Front.
MachineGraph build_custom(std::vector<int> capacities,
                          const std::vector<std::pair<int, int>>& links);

}  // namespace qccd
