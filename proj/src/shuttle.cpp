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

#include "qccd/shuttle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qccd {

ShuttleDag::ShuttleDag(std::vector<ShuttleOp> ops)
    : ops_(std::move(ops)), preds_(ops_.size()), succs_(ops_.size()) {
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (ops_[i].qubit == ops_[j].qubit || ops_[i].junction == ops_[j].junction) {
        preds_[j].push_back(i);
        succs_[i].push_back(j);
      }
    }
  }
}

std::size_t ShuttleDag::edge_count() const {
  std::size_t n = 0;
  for (const auto& p : preds_) n += p.size();
  return n;
}

std::size_t ShuttleDag::level_count() const {
  std::vector<std::size_t> level(ops_.size(), 1);
  std::size_t best = 0;
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    for (std::size_t i : preds_[j]) level[j] = std::max(level[j], level[i] + 1);
    best = std::max(best, level[j]);
  }
  return best;
}

ShuttleDag decompose_moves(std::span<const PlannedMove> moves, const MachineGraph& machine) {
  std::vector<ShuttleOp> ops;
  for (const PlannedMove& m : moves) {
    for (std::size_t i = 0; i + 1 < m.path.size(); ++i) {
      auto j = machine.junction_between(m.path[i], m.path[i + 1]);
      if (!j) throw std::invalid_argument("move path uses traps without a junction");
      ops.push_back({ops.size(), m.qubit, m.path[i], m.path[i + 1], *j});
    }
  }
  return ShuttleDag(std::move(ops));
}

std::vector<std::vector<std::size_t>> extract_rounds(const ShuttleDag& dag) {
  std::vector<std::size_t> remaining(dag.size());
  for (std::size_t i = 0; i < dag.size(); ++i) remaining[i] = dag.predecessors(i).size();
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < dag.size(); ++i)
    if (remaining[i] == 0) frontier.push_back(i);

  std::vector<std::vector<std::size_t>> rounds;
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier)
      for (std::size_t s : dag.successors(i))
        if (--remaining[s] == 0) next.push_back(s);
    std::sort(next.begin(), next.end());
    rounds.push_back(std::move(frontier));
    frontier = std::move(next);
  }
  return rounds;
}

std::vector<Operation> expand_swaps(std::span<const ShuttleOp> round, const MachineGraph& machine,
                                    IonConfiguration& config) {
  std::vector<Operation> out;
  for (const ShuttleOp& op : round) {
    if (config.trap_of(op.qubit) != op.from) throw std::logic_error("shuttle origin does not hold the ion");
    const Junction& j = machine.junction(op.junction);
    const ChainEnd exit = j.end_at(op.from);
    const auto& chain = config.chain(op.from);
    std::size_t pos = config.position_of(op.qubit);
    if (exit == ChainEnd::Back) {
      for (; pos + 1 < chain.size(); ++pos) {
        out.emplace_back(SwapRecord{op.from, op.qubit, chain[pos + 1]});
        config.swap_adjacent(op.from, pos);
      }
    } else {
      for (; pos > 0; --pos) {
        out.emplace_back(SwapRecord{op.from, op.qubit, chain[pos - 1]});
        config.swap_adjacent(op.from, pos - 1);
      }
    }
    config.remove(op.qubit);
    config.insert(op.qubit, op.to, j.end_at(op.to));
    out.emplace_back(ShuttleRecord{op.qubit, op.from, op.to, op.junction});
  }
  return out;
}

}  // namespace qccd
