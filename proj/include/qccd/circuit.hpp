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

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qccd/ids.hpp"

namespace qccd {

enum class GateType { H, X, RZ, CX, CP, CZ, SWAP };

[[nodiscard]] std::string_view gate_name(GateType type);
[[nodiscard]] bool is_two_qubit(GateType type);
[[nodiscard]] bool has_angle(GateType type);

struct Gate {
  std::size_t id = 0;
  GateType type = GateType::H;
  std::array<QubitId, 2> qubits{};
  double angle = 0.0;

  [[nodiscard]] bool two_qubit() const { return is_two_qubit(type); }
  [[nodiscard]] std::size_t arity() const { return two_qubit() ? 2 : 1; }
  [[nodiscard]] bool acts_on(QubitId q) const {
    return qubits[0] == q || (two_qubit() && qubits[1] == q);
  }
  /// The other operand of a two-qubit gate.
  [[nodiscard]] QubitId partner(QubitId q) const { return qubits[0] == q ? qubits[1] : qubits[0]; }
};

/// An ordered gate list over a dense qubit register.
struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  /// Appends with the next gate id. Throws std::invalid_argument for
  /// out-of-range qubits or repeated operands.
  void add(GateType type, QubitId a, double angle = 0.0);
  void add(GateType type, QubitId a, QubitId b, double angle = 0.0);
  void add(GateType type, int a, double angle = 0.0) { add(type, QubitId(a), angle); }
  void add(GateType type, int a, int b, double angle = 0.0) { add(type, QubitId(a), QubitId(b), angle); }

  [[nodiscard]] std::size_t two_qubit_count() const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the OpenQASM 2.0 subset: optional header and include, one qreg,
/// gates h, x, rz(θ), cx, cp(θ), cz, swap; `//` comments. Without a qreg
/// the register is implied by the operands and sized by the largest index.
/// Angles accept numbers, `pi` and simple arithmetic on them.
[[nodiscard]] Circuit parse_circuit(std::string_view text);
[[nodiscard]] std::string to_qasm(const Circuit& circuit);

/// Gate-dependency DAG with ASAP layering. An edge joins consecutive gates
/// on the same qubit. Layers count two-qubit gates: a single-qubit gate
/// sits in the layer of the two-qubit gate that precedes it on its qubit
/// (layer 0 if none) and never opens a layer of its own.
class GateDag {
 public:
  explicit GateDag(const Circuit& circuit);

  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] const Gate& gate(std::size_t id) const { return gates_.at(id); }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
  [[nodiscard]] const std::vector<std::size_t>& predecessors(std::size_t id) const { return preds_.at(id); }
  [[nodiscard]] const std::vector<std::size_t>& successors(std::size_t id) const { return succs_.at(id); }
  [[nodiscard]] int layer(std::size_t id) const { return layers_.at(id); }
  /// Number of ASAP layers; 0 for an empty circuit, 1 if only 1q gates.
  [[nodiscard]] int depth() const { return depth_; }
  [[nodiscard]] std::vector<std::size_t> sources() const;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succs_;
  std::vector<int> layers_;
  int depth_ = 0;
};

struct CircuitMetrics {
  int depth = 0;
  std::size_t two_q_count = 0;
  double avg_2q_per_ts = 0.0;
  double avg_ion_mov_per_ts = 0.0;
  /// Partner changes per qubit: the k-th two-qubit gate on a qubit counts
  /// one movement when its partner differs from that of gate k-1.
  std::vector<std::size_t> movement_per_qubit;
};

[[nodiscard]] CircuitMetrics compute_metrics(const GateDag& dag);

// Benchmark generators. All are pure functions of their arguments.

[[nodiscard]] Circuit generate_qft(int n);
/// One QAOA layer on the complete graph: H on all qubits, a ZZ interaction
/// per unordered pair (lexicographic order), then the mixer.
[[nodiscard]] Circuit generate_qaoa_complete(int n);
/// Cuccaro ripple-carry adder on two (n/2 - 1)-bit registers plus carry-in
/// and carry-out; Toffolis decomposed into 6 CX.
[[nodiscard]] Circuit generate_cuccaro(int n);
/// Draper QFT adder on two n/2-bit registers.
[[nodiscard]] Circuit generate_draper(int n);
/// Layers of perfect matchings. Each pair of the previous layer survives
/// with probability repeat_bias, drawn as a stratified sample: every layer
/// keeps repeat_bias of the pairs, rounding carried forward. The remaining
/// qubits are re-paired uniformly.
[[nodiscard]] Circuit generate_random(int n, int layers, double repeat_bias, std::uint64_t seed);

/// Repeat biases of the RND10 / RND80 presets, tuned so that the 40-qubit,
/// 40-layer circuits land on the published interaction diversity.
inline constexpr double kRnd10RepeatBias = 0.89;
inline constexpr double kRnd80RepeatBias = 0.21;

/// Named benchmark: qft, qaoa, cuccaro (ca), draper (da), rnd10, rnd80.
/// Random presets use n layers.
[[nodiscard]] Circuit generate_benchmark(const std::string& name, int n, std::uint64_t seed);
/// Applies a seeded random permutation to qubit labels.
[[nodiscard]] Circuit relabel_qubits(const Circuit& circuit, std::uint64_t seed);

}  // namespace qccd
