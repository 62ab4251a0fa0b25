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

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qccd/physics.hpp"
#include "qccd/scoring.hpp"
#include "qccd/topology.hpp"
#include "qccd/trace.hpp"

namespace qccd {

inline constexpr int kTraceFormatVersion = 1;

[[nodiscard]] nlohmann::json machine_to_json(const MachineGraph& machine);
[[nodiscard]] MachineGraph machine_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json weights_to_json(const ScoreWeights& w);
[[nodiscard]] nlohmann::json metrics_to_json(const RunMetrics& m);

/// Full trace document: version, seed, machine, circuit, initial
/// placement, rounds with per-op durations, and the run metrics.
[[nodiscard]] nlohmann::json trace_to_json(const ExecutionTrace& trace, const MachineGraph& machine,
                                           const PhysicsParams& physics, const RunMetrics& metrics,
                                           std::uint64_t seed);

struct LoadedTrace {
  MachineGraph machine;
  ExecutionTrace trace;
};

/// Parses a trace document. Structural problems (missing fields, unknown
/// op kinds, bad ids) raise ValidationError; semantic checks are left to
/// replay_trace.
[[nodiscard]] LoadedTrace trace_from_json(std::string_view text);

}  // namespace qccd
