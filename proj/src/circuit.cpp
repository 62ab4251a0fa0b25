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

#include <algorithm>
#include <optional>

#include "qccd/circuit.hpp"

namespace qccd {

std::string_view gate_name(GateType type) {
  switch (type) {
    case GateType::H: return "h";
    case GateType::X: return "x";
    case GateType::RZ: return "rz";
    case GateType::CX: return "cx";
    case GateType::CP: return "cp";
    case GateType::CZ: return "cz";
    case GateType::SWAP: return "swap";
  }
  return "?";
}

bool is_two_qubit(GateType type) {
  return type == GateType::CX || type == GateType::CP || type == GateType::CZ ||
         type == GateType::SWAP;
}

bool has_angle(GateType type) { return type == GateType::RZ || type == GateType::CP; }

void Circuit::add(GateType type, QubitId a, double angle) {
  if (is_two_qubit(type)) throw std::invalid_argument("two-qubit gate needs two operands");
  if (a.index() >= num_qubits) throw std::invalid_argument("qubit index out of range");
  gates.push_back(Gate{gates.size(), type, {a, a}, angle});
}

void Circuit::add(GateType type, QubitId a, QubitId b, double angle) {
  if (!is_two_qubit(type)) throw std::invalid_argument("single-qubit gate takes one operand");
  if (a.index() >= num_qubits || b.index() >= num_qubits)
    throw std::invalid_argument("qubit index out of range");
  if (a == b) throw std::invalid_argument("two-qubit gate operands must differ");
  gates.push_back(Gate{gates.size(), type, {a, b}, angle});
}

std::size_t Circuit::two_qubit_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [](const Gate& g) { return g.two_qubit(); }));
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

GateDag::GateDag(const Circuit& circuit)
    : num_qubits_(circuit.num_qubits), gates_(circuit.gates) {
  const std::size_t n = gates_.size();
  preds_.resize(n);
  succs_.resize(n);
  layers_.assign(n, 0);
  std::vector<std::optional<std::size_t>> last(num_qubits_);
  // next_free[g]: earliest layer a later two-qubit gate on g's qubits may use.
  std::vector<int> next_free(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Gate& g = gates_[i];
    g.id = i;
    int ready = 0;
    for (std::size_t k = 0; k < g.arity(); ++k) {
      auto& prev = last.at(g.qubits[k].index());
      if (prev && (preds_[i].empty() || preds_[i].back() != *prev)) {
        preds_[i].push_back(*prev);
        succs_[*prev].push_back(i);
      }
      if (prev) ready = std::max(ready, next_free[*prev]);
      prev = i;
    }
    std::sort(preds_[i].begin(), preds_[i].end());
    preds_[i].erase(std::unique(preds_[i].begin(), preds_[i].end()), preds_[i].end());
    if (g.two_qubit()) {
      layers_[i] = ready;
      next_free[i] = ready + 1;
      depth_ = std::max(depth_, ready + 1);
    } else {
      layers_[i] = std::max(0, ready - 1);
      next_free[i] = ready;
      depth_ = std::max(depth_, 1);
    }
  }
  for (auto& s : succs_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

std::vector<std::size_t> GateDag::sources() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gates_.size(); ++i)
    if (preds_[i].empty()) out.push_back(i);
  return out;
}

CircuitMetrics compute_metrics(const GateDag& dag) {
  CircuitMetrics m;
  m.depth = dag.depth();
  m.movement_per_qubit.assign(dag.num_qubits(), 0);
  std::vector<std::optional<QubitId>> previous_partner(dag.num_qubits());
  for (const Gate& g : dag.gates()) {
    if (!g.two_qubit()) continue;
    ++m.two_q_count;
    for (QubitId q : g.qubits) {
      QubitId partner = g.partner(q);
      auto& prev = previous_partner[q.index()];
      if (prev && *prev != partner) ++m.movement_per_qubit[q.index()];
      prev = partner;
    }
  }
  if (m.depth > 0) {
    std::size_t total = 0;
    for (std::size_t v : m.movement_per_qubit) total += v;
    m.avg_2q_per_ts = static_cast<double>(m.two_q_count) / m.depth;
    m.avg_ion_mov_per_ts = static_cast<double>(total) / m.depth;
  }
  return m;
}

}  // namespace qccd
