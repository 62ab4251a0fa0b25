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

#include "qccd/topology.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace qccd {

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Linear: return "linear";
    case TopologyKind::Ring: return "ring";
    case TopologyKind::Grid: return "grid";
    case TopologyKind::Custom: return "custom";
  }
  return "custom";
}

TopologyKind topology_kind_from_string(const std::string& name) {
  if (name == "linear") return TopologyKind::Linear;
  if (name == "ring") return TopologyKind::Ring;
  if (name == "grid") return TopologyKind::Grid;
  if (name == "custom") return TopologyKind::Custom;
  throw std::invalid_argument("unknown topology kind '" + name + "'");
}

MachineGraph::MachineGraph(TopologyKind kind, std::vector<Trap> traps,
                           std::vector<Junction> junctions)
    : kind_(kind), traps_(std::move(traps)), junctions_(std::move(junctions)) {
  if (traps_.empty()) throw std::invalid_argument("machine needs at least one trap");
  for (std::size_t i = 0; i < traps_.size(); ++i) {
    if (traps_[i].id.index() != i) throw std::invalid_argument("trap ids must be dense from 0");
    if (traps_[i].capacity < 1) throw std::invalid_argument("trap capacity must be >= 1");
  }
  adjacency_.resize(traps_.size());
  junction_index_.resize(traps_.size());
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t i = 0; i < junctions_.size(); ++i) {
    const Junction& j = junctions_[i];
    if (j.id.index() != i) throw std::invalid_argument("junction ids must be dense from 0");
    if (j.a.index() >= traps_.size() || j.b.index() >= traps_.size())
      throw std::invalid_argument("junction references unknown trap");
    if (j.a == j.b) throw std::invalid_argument("self-loop junction");
    auto key = std::minmax(j.a.value, j.b.value);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate junction between traps");
    adjacency_[j.a.index()].push_back(j.b);
    adjacency_[j.b.index()].push_back(j.a);
  }
  for (std::size_t t = 0; t < traps_.size(); ++t) {
    std::sort(adjacency_[t].begin(), adjacency_[t].end());
    for (TrapId n : adjacency_[t]) {
      for (const Junction& j : junctions_) {
        if ((j.a.index() == t && j.b == n) || (j.b.index() == t && j.a == n)) {
          junction_index_[t].push_back(j.id);
          break;
        }
      }
    }
  }
  distance_table_.reserve(traps_.size());
  for (std::size_t t = 0; t < traps_.size(); ++t) {
    std::vector<int> dist(traps_.size(), -1);
    std::deque<TrapId> queue{TrapId(t)};
    dist[t] = 0;
    while (!queue.empty()) {
      TrapId cur = queue.front();
      queue.pop_front();
      for (TrapId n : adjacency_[cur.index()]) {
        if (dist[n.index()] < 0) {
          dist[n.index()] = dist[cur.index()] + 1;
          queue.push_back(n);
        }
      }
    }
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
      throw std::invalid_argument("machine graph is not connected");
    distance_table_.push_back(std::move(dist));
  }
}

int MachineGraph::total_capacity() const {
  int total = 0;
  for (const Trap& t : traps_) total += t.capacity;
  return total;
}

std::optional<JunctionId> MachineGraph::junction_between(TrapId a, TrapId b) const {
  const auto& adj = adjacency_.at(a.index());
  auto it = std::lower_bound(adj.begin(), adj.end(), b);
  if (it == adj.end() || *it != b) return std::nullopt;
  return junction_index_[a.index()][static_cast<std::size_t>(it - adj.begin())];
}

ChainEnd MachineGraph::exit_end(TrapId from, TrapId to) const {
  auto j = junction_between(from, to);
  if (!j) throw std::invalid_argument("traps are not adjacent");
  return junction(*j).end_at(from);
}

std::vector<int> MachineGraph::distances_from(TrapId source) const {
  return distance_table_.at(source.index());
}

int MachineGraph::distance(TrapId a, TrapId b) const {
  return distance_table_.at(a.index()).at(b.index());
}

std::vector<TrapPath> MachineGraph::all_shortest_paths(TrapId a, TrapId b) const {
  const std::vector<int>& to_b = distance_table_.at(b.index());
  std::vector<TrapPath> paths;
  TrapPath current{a};
  // Depth-first over neighbours in id order; each step must shrink the
  // distance to b by one, so every completed walk is a shortest path and
  // the output is lexicographic.
  std::function<void(TrapId)> walk = [&](TrapId at) {
    if (paths.size() >= kMaxShortestPaths) return;
    if (at == b) {
      paths.push_back(current);
      return;
    }
    for (TrapId n : adjacency_[at.index()]) {
      if (to_b[n.index()] == to_b[at.index()] - 1) {
        current.push_back(n);
        walk(n);
        current.pop_back();
      }
    }
  };
  walk(a);
  return paths;
}

namespace {

Junction link(std::size_t id, int a, int b, ChainEnd end_a, ChainEnd end_b) {
  return Junction{JunctionId(id), TrapId(a), TrapId(b), end_a, end_b};
}

std::vector<Trap> uniform_traps(int n, int capacity) {
  std::vector<Trap> traps;
  for (int i = 0; i < n; ++i) traps.push_back(Trap{TrapId(i), capacity});
  return traps;
}

}  // namespace

MachineGraph build_linear(int n_traps, int capacity) {
  if (n_traps < 1) throw std::invalid_argument("linear topology needs at least one trap");
  if (capacity < 1) throw std::invalid_argument("trap capacity must be >= 1");
  std::vector<Junction> js;
  for (int i = 0; i + 1 < n_traps; ++i)
    js.push_back(link(js.size(), i, i + 1, ChainEnd::Back, ChainEnd::Front));
  return MachineGraph(TopologyKind::Linear, uniform_traps(n_traps, capacity), std::move(js));
}

MachineGraph build_ring(int n_traps, int capacity) {
  if (n_traps < 3) throw std::invalid_argument("ring topology needs at least three traps");
  if (capacity < 1) throw std::invalid_argument("trap capacity must be >= 1");
  std::vector<Junction> js;
  for (int i = 0; i + 1 < n_traps; ++i)
    js.push_back(link(js.size(), i, i + 1, ChainEnd::Back, ChainEnd::Front));
  // Closing link: last trap's back end meets the first trap's front end.
  js.push_back(link(js.size(), n_traps - 1, 0, ChainEnd::Back, ChainEnd::Front));
  return MachineGraph(TopologyKind::Ring, uniform_traps(n_traps, capacity), std::move(js));
}

MachineGraph build_grid(int rows, int cols, int capacity) {
  if (rows < 1 || cols < 1 || rows * cols < 2)
    throw std::invalid_argument("grid topology needs at least two traps");
  if (capacity < 1) throw std::invalid_argument("trap capacity must be >= 1");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<Junction> js;
  // Front end faces left/up neighbours, back end faces right/down.
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c)
      js.push_back(link(js.size(), id(r, c), id(r, c + 1), ChainEnd::Back, ChainEnd::Front));
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c)
      js.push_back(link(js.size(), id(r, c), id(r + 1, c), ChainEnd::Back, ChainEnd::Front));
  return MachineGraph(TopologyKind::Grid, uniform_traps(rows * cols, capacity), std::move(js));
}

MachineGraph build_custom(std::vector<int> capacities,
                          const std::vector<std::pair<int, int>>& links) {
  std::vector<Trap> traps;
  for (std::size_t i = 0; i < capacities.size(); ++i) traps.push_back(Trap{TrapId(i), capacities[i]});
  std::vector<Junction> js;
  for (auto [a, b] : links) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative trap id in junction list");
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    js.push_back(link(js.size(), lo, hi, ChainEnd::Back, ChainEnd::Front));
  }
  return MachineGraph(TopologyKind::Custom, std::move(traps), std::move(js));
}

}  // namespace qccd
