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
#include <vector>

#include "qccd/ids.hpp"
#include "qccd/topology.hpp"

namespace qccd {

/// Per-trap ordered ion chains plus the reverse qubit -> trap index.
class IonConfiguration {
 public:
  IonConfiguration() = default;
  IonConfiguration(std::size_t num_traps, std::size_t num_qubits);

  /// Builds from explicit chains. Every qubit 0..num_qubits-1 must appear
  /// exactly once; throws std::invalid_argument otherwise.
  static IonConfiguration from_chains(std::vector<std::vector<QubitId>> chains, std::size_t num_qubits);

  [[nodiscard]] std::size_t num_traps() const { return chains_.size(); }
  [[nodiscard]] std::size_t num_qubits() const { return trap_of_.size(); }
  [[nodiscard]] const std::vector<QubitId>& chain(TrapId t) const { return chains_.at(t.index()); }
  [[nodiscard]] const std::vector<std::vector<QubitId>>& chains() const { return chains_; }
  [[nodiscard]] int occupancy(TrapId t) const { return static_cast<int>(chains_.at(t.index()).size()); }
  [[nodiscard]] TrapId trap_of(QubitId q) const { return trap_of_.at(q.index()); }
  [[nodiscard]] std::size_t position_of(QubitId q) const;
  /// Number of ions between q and the given end of its chain.
  [[nodiscard]] std::size_t distance_to_end(QubitId q, ChainEnd end) const;

  void remove(QubitId q);
  void insert(QubitId q, TrapId t, ChainEnd end);
  /// Exchanges the ions at positions pos and pos + 1 of trap t.
  void swap_adjacent(TrapId t, std::size_t pos);

  /// Worst overfill (occupancy - capacity) over all traps; <= 0 when valid.
  [[nodiscard]] int max_overfill(const MachineGraph& machine) const;

  bool operator==(const IonConfiguration&) const = default;

 private:
  std::vector<std::vector<QubitId>> chains_;
  std::vector<TrapId> trap_of_;
};

}  // namespace qccd
