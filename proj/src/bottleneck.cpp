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

#include <limits>

#include "qccd/router.hpp"

namespace qccd {

BottleneckResolution resolve_bottleneck(TrapId trap, const MachineGraph& machine, const IonConfiguration& config,
                                        const Lookahead& lookahead, const std::vector<bool>& immovable) {
  std::vector<int> dist = machine.distances_from(trap);
  int nearest = std::numeric_limits<int>::max();
  for (const Trap& t : machine.traps())
    if (t.id != trap && config.occupancy(t.id) < t.capacity) nearest = std::min(nearest, dist[t.id.index()]);

  BottleneckResolution best;
  if (nearest == std::numeric_limits<int>::max()) return best;

  for (const Trap& free_trap : machine.traps()) {
    if (free_trap.id == trap || dist[free_trap.id.index()] != nearest) continue;
    if (config.occupancy(free_trap.id) >= free_trap.capacity) continue;

    for (const TrapPath& path : machine.all_shortest_paths(trap, free_trap.id)) {
      IonConfiguration scratch = config;
      BottleneckResolution attempt;
      attempt.feasible = true;
      for (std::size_t i = path.size() - 1; i-- > 0;) {
        const TrapId hop[] = {path[i], path[i + 1]};
        std::optional<QubitId> chosen;
        double chosen_score = 0.0;
        for (QubitId q : scratch.chain(path[i])) {
          if (immovable[q.index()]) continue;
          double s = bottleneck_score(q, hop, machine, scratch, lookahead);
          if (!chosen || s > chosen_score || (s == chosen_score && q < *chosen)) {
            chosen = q;
            chosen_score = s;
          }
        }
        if (!chosen) {
          attempt.feasible = false;
          break;
        }
        MovementCounts m = single_ion_movement(*chosen, hop, machine, scratch);
        attempt.shuttles += m.shuttles;
        attempt.swaps += m.swaps;
        attempt.score += chosen_score;
        PlannedMove move{*chosen, {path[i], path[i + 1]}};
        apply_move(scratch, machine, move);
        attempt.moves.push_back(std::move(move));
      }
      if (attempt.feasible && (!best.feasible || attempt.score > best.score)) best = std::move(attempt);
    }
  }
  return best;
}

}  // namespace qccd
