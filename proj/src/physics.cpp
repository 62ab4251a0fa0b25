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

#include "qccd/physics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <type_traits>

namespace qccd {

void PhysicsParams::validate() const {
  for (double t : {t_1q, t_2q, t_swap, t_shuttle, t_split_merge, heat_per_shuttle, e_heat_coeff, chain_coeff})
    if (!(t >= 0.0)) throw std::invalid_argument("physics durations and coefficients must be non-negative");
  for (double e : {e_1q, e_2q_base})
    if (!(e >= 0.0 && e < 1.0)) throw std::invalid_argument("error probabilities must lie in [0, 1)");
  if (!(T2 > 0.0)) throw std::invalid_argument("T2 must be positive");
}

double coherence_factor(double exec_time_us, double T2) { return std::exp(-exec_time_us / T2); }

double op_duration(const Operation& op, const std::vector<Gate>& gates, const PhysicsParams& p) {
  if (std::holds_alternative<SwapRecord>(op)) return p.t_swap;
  if (std::holds_alternative<ShuttleRecord>(op)) return p.t_split_merge + p.t_shuttle;
  return gates.at(std::get<GateRecord>(op).gate).two_qubit() ? p.t_2q : p.t_1q;
}

double round_duration(const Round& round, const std::vector<Gate>& gates, const PhysicsParams& p) {
  std::map<TrapId, double> work;
  for (const Operation& op : round.ops) {
    TrapId trap = std::visit(
        [](const auto& rec) {
          if constexpr (std::is_same_v<std::decay_t<decltype(rec)>, ShuttleRecord>)
            return rec.from;
          else
            return rec.trap;
        },
        op);
    work[trap] += op_duration(op, gates, p);
  }
  double longest = 0.0;
  for (const auto& [trap, t] : work) longest = std::max(longest, t);
  return longest;
}

namespace {

class FidelityObserver : public ReplayObserver {
 public:
  FidelityObserver(const MachineGraph& machine, const ExecutionTrace& trace, const PhysicsParams& p)
      : trace_(trace), p_(p), heat_(machine.num_traps(), 0.0) {}

  void begin_round(const Round& round) override { time_ += round_duration(round, trace_.gates, p_); }
  void on_swap(const SwapRecord& s, const IonConfiguration& config) override { two_qubit(s.trap, config); }
  void on_shuttle(const ShuttleRecord& m, const IonConfiguration&) override {
    heat_[m.from.index()] += p_.heat_per_shuttle;
    heat_[m.to.index()] += p_.heat_per_shuttle;
  }
  void on_gate(const GateRecord& g, const Gate& gate, const IonConfiguration& config) override {
    if (gate.two_qubit())
      two_qubit(g.trap, config);
    else
      product_ *= 1.0 - p_.e_1q;
  }

  double time() const { return time_; }
  double product() const { return product_; }
  const std::vector<double>& heat() const { return heat_; }

 private:
  void two_qubit(TrapId trap, const IonConfiguration& config) {
    double e = p_.e_2q_base + p_.chain_coeff * (config.occupancy(trap) - 2) + p_.e_heat_coeff * heat_[trap.index()];
    product_ *= 1.0 - std::clamp(e, 0.0, 1.0);
  }

  const ExecutionTrace& trace_;
  const PhysicsParams& p_;
  std::vector<double> heat_;
  double time_ = 0.0;
  double product_ = 1.0;
};

}  // namespace

RunMetrics accumulate_fidelity(const MachineGraph& machine, const ExecutionTrace& trace, const PhysicsParams& p,
                               bool require_complete) {
  p.validate();
  FidelityObserver observer(machine, trace, p);
  ReplayReport report = replay_trace(machine, trace, &observer, require_complete);

  RunMetrics m;
  m.shuttle_count = trace.shuttle_count();
  m.swap_count = trace.swap_count();
  m.gate_count = report.gates_executed;
  m.rounds = trace.rounds.size();
  m.depth = trace.gate_round_count();
  m.exec_time_us = observer.time();
  m.gate_fidelity_product = observer.product();
  m.coherence_factor = coherence_factor(m.exec_time_us, p.T2);
  m.total_fidelity = m.gate_fidelity_product * m.coherence_factor;
  m.peak_overfill = report.peak_overfill;
  m.heat = observer.heat();
  return m;
}

}  // namespace qccd
