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

#include "qccd/ion_config.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qccd {

IonConfiguration::IonConfiguration(std::size_t num_traps, std::size_t num_qubits)
    : chains_(num_traps), trap_of_(num_qubits) {}

IonConfiguration IonConfiguration::from_chains(std::vector<std::vector<QubitId>> chains,
                                               std::size_t num_qubits) {
  IonConfiguration config(chains.size(), num_qubits);
  std::vector<bool> seen(num_qubits, false);
  for (std::size_t t = 0; t < chains.size(); ++t) {
    for (QubitId q : chains[t]) {
      if (q.index() >= num_qubits) throw std::invalid_argument("qubit " + std::to_string(q.value) + " out of range");
      if (seen[q.index()]) throw std::invalid_argument("qubit " + std::to_string(q.value) + " placed twice");
      seen[q.index()] = true;
      config.trap_of_[q.index()] = TrapId(t);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("placement leaves a qubit unassigned");
  config.chains_ = std::move(chains);
  return config;
}

std::size_t IonConfiguration::position_of(QubitId q) const {
  const auto& c = chain(trap_of(q));
  auto it = std::find(c.begin(), c.end(), q);
  if (it == c.end()) throw std::logic_error("qubit missing from its chain");
  return static_cast<std::size_t>(it - c.begin());
}

std::size_t IonConfiguration::distance_to_end(QubitId q, ChainEnd end) const {
  std::size_t pos = position_of(q);
  return end == ChainEnd::Front ? pos : chain(trap_of(q)).size() - 1 - pos;
}

void IonConfiguration::remove(QubitId q) {
  auto& c = chains_.at(trap_of(q).index());
  c.erase(c.begin() + static_cast<std::ptrdiff_t>(position_of(q)));
}

void IonConfiguration::insert(QubitId q, TrapId t, ChainEnd end) {
  auto& c = chains_.at(t.index());
  if (end == ChainEnd::Front)
    c.insert(c.begin(), q);
  else
    c.push_back(q);
  trap_of_.at(q.index()) = t;
}

void IonConfiguration::swap_adjacent(TrapId t, std::size_t pos) {
  auto& c = chains_.at(t.index());
  if (pos + 1 >= c.size()) throw std::out_of_range("swap position outside chain");
  std::swap(c[pos], c[pos + 1]);
}

int IonConfiguration::max_overfill(const MachineGraph& machine) const {
  int worst = 0;
  bool first = true;
  for (const Trap& t : machine.traps()) {
    int over = occupancy(t.id) - t.capacity;
    if (first || over > worst) worst = over;
    first = false;
  }
  return worst;
}

}  // namespace qccd
