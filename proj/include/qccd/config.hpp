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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qccd/circuit.hpp"
#include "qccd/physics.hpp"
#include "qccd/router.hpp"
#include "qccd/scoring.hpp"
#include "qccd/sweep.hpp"
#include "qccd/topology.hpp"

namespace qccd {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the TOML subset used by run configs: `[section]` headers,
/// `key = value` pairs, `#` comments; values are strings, integers,
/// floats, booleans, `inf`/`-inf` and (nested) arrays on one line.
[[nodiscard]] nlohmann::json parse_toml(std::string_view text);

struct TopologySpec {
  TopologyKind kind = TopologyKind::Linear;
  int traps = 0;
  int capacity = 0;
  int rows = 0;
  int cols = 0;
  std::vector<int> capacities;
  std::vector<std::pair<int, int>> links;

  [[nodiscard]] MachineGraph build() const;
};

struct CircuitSpec {
  /// QASM file; resolved against the config file's directory.
  std::optional<std::filesystem::path> file;
  /// Generator name: qft, qaoa, cuccaro, draper, rnd10, rnd80 or random.
  std::string generator;
  int qubits = 0;
  int layers = 0;
  double repeat_bias = 0.5;
  /// Apply a seeded permutation of qubit labels.
  bool relabel = false;

  [[nodiscard]] Circuit load(std::uint64_t seed) const;
};

struct RunConfig {
  std::uint64_t seed = 1;
  TopologySpec topology;
  CircuitSpec circuit;
  PlacementStrategy placement = PlacementStrategy::Sequential;
  std::optional<ScoreWeights> weights;
  std::optional<StagePlan> sweep;
  unsigned threads = 0;
  PhysicsParams physics;
  std::filesystem::path out_dir = "out";
};

/// Validates sections and keys; exactly one of [weights] and [sweep] must
/// be present. Relative paths resolve against base_dir.
[[nodiscard]] RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

}  // namespace qccd
