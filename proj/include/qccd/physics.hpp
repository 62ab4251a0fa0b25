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

#include <vector>

#include "qccd/topology.hpp"
#include "qccd/trace.hpp"

namespace qccd {

/// Durations in microseconds; errors are per-operation probabilities.
struct PhysicsParams {
  double t_1q = 1.0;
  double t_2q = 40.0;
  double t_swap = 120.0;
  double t_shuttle = 100.0;
  double t_split_merge = 80.0;
  double e_1q = 1e-5;
  double e_2q_base = 5e-3;
  double heat_per_shuttle = 1.0;
  double e_heat_coeff = 1e-5;
  double chain_coeff = 5e-5;
  double T2 = 2e6;

  /// Throws std::invalid_argument on negative durations, error rates
  /// outside [0, 1) or a non-positive T2.
  void validate() const;
  bool operator==(const PhysicsParams&) const = default;
};

struct RunMetrics {
  std::size_t shuttle_count = 0;
  std::size_t swap_count = 0;
  std::size_t gate_count = 0;
  std::size_t rounds = 0;
  /// Number of gate rounds, the schedule depth.
  std::size_t depth = 0;
  double exec_time_us = 0.0;
  double gate_fidelity_product = 1.0;
  double coherence_factor = 1.0;
  double total_fidelity = 1.0;
  int peak_overfill = 0;
  /// Heat of each trap at the end of the run.
  std::vector<double> heat;
};

[[nodiscard]] double coherence_factor(double exec_time_us, double T2);

/// Duration of one operation taken on its own.
[[nodiscard]] double op_duration(const Operation& op, const std::vector<Gate>& gates, const PhysicsParams& p);

/// Traps work in parallel and serially inside: the round lasts as long as
/// the busiest trap. Swaps and departures are charged to the trap they
/// happen in; a departure costs t_split_merge + t_shuttle.
[[nodiscard]] double round_duration(const Round& round, const std::vector<Gate>& gates, const PhysicsParams& p);

/// Replays the trace (validating it) and multiplies the success
/// probability of every gate and swap. Two-qubit gates and swaps fail with
/// e_2q_base + chain_coeff·(occupancy - 2) + e_heat_coeff·heat, where each
/// shuttle adds heat_per_shuttle to both traps it touches. A partial trace
/// (a schedule prefix) is accepted when require_complete is false.
[[nodiscard]] RunMetrics accumulate_fidelity(const MachineGraph& machine, const ExecutionTrace& trace,
                                             const PhysicsParams& p, bool require_complete = true);

}  // namespace qccd
