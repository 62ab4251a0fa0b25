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
#include <string>
#include <vector>

#include "qccd/circuit.hpp"
#include "qccd/ion_config.hpp"
#include "qccd/physics.hpp"
#include "qccd/scoring.hpp"
#include "qccd/topology.hpp"

namespace qccd {

enum class Stage { SwapAndShuttle, Threshold, Parallelism, FutureOps, ExcessCapacity };
inline constexpr std::array<Stage, 5> kStageOrder = {Stage::SwapAndShuttle, Stage::Threshold, Stage::Parallelism,
                                                     Stage::FutureOps, Stage::ExcessCapacity};
std::string to_string(Stage stage);

/// `points` evenly spaced values from lo to hi inclusive.
[[nodiscard]] std::vector<double> linspace(double lo, double hi, std::size_t points);

struct StagePlan {
  std::vector<double> swap_grid;
  std::vector<double> shuttle_grid;
  std::vector<double> threshold_grid;
  std::vector<double> parallelism_grid;
  std::vector<double> future_ops_grid;
  std::vector<double> excess_capacity_grid;
  std::size_t retain_k = 10;
  /// Starting point: the values of parameters not yet swept.
  ScoreWeights seed;

  /// λ over 1..65, α over 30..180, τ over -350..-60 and the rest over
  /// 1..20, each with `points` values; every other weight 1, τ = -350.
  static StagePlan defaults(std::size_t points = 8);
  void validate() const;
};

/// One routed and scored weight configuration.
struct Evaluation {
  Stage stage = Stage::SwapAndShuttle;
  std::size_t index = 0;
  ScoreWeights weights;
  RunMetrics metrics;
  /// False when routing failed; such points score fidelity 0.
  bool ok = true;

  [[nodiscard]] std::size_t movement_ops() const { return metrics.shuttle_count + metrics.swap_count; }
};

/// Fidelity descending, then fewer shuttles + swaps, then lexicographic
/// (α, λ, β, σ, γ, τ, L).
[[nodiscard]] bool ranks_before(const Evaluation& a, const Evaluation& b);

/// Fixed circuit, machine, placement and physics against which weight
/// configurations are compared.
struct SweepBench {
  const GateDag& dag;
  const MachineGraph& machine;
  IonConfiguration initial;
  PhysicsParams physics;
};

[[nodiscard]] Evaluation evaluate(const SweepBench& bench, const ScoreWeights& weights);

/// Evaluates carried x grid, concurrently when threads > 1, and returns
/// the evaluations in (carried, grid) order.
[[nodiscard]] std::vector<Evaluation> run_stage(Stage stage, const std::vector<ScoreWeights>& carried,
                                                const StagePlan& plan, const SweepBench& bench,
                                                unsigned threads = 1);

/// Top retain_k of the stage evaluations plus the incumbent, ranked.
[[nodiscard]] std::vector<Evaluation> retain(const std::vector<Evaluation>& stage_evals, const Evaluation* incumbent,
                                             std::size_t retain_k);

struct StageSummary {
  Stage stage = Stage::SwapAndShuttle;
  std::vector<Evaluation> retained;
  /// Best fidelity seen so far, after this stage.
  double best_fidelity = 0.0;
  /// Every evaluation of the stage scored within 1e-9 of the others.
  bool no_impact = false;
};

struct SweepResult {
  std::vector<Evaluation> evaluations;
  std::vector<StageSummary> stages;
  Evaluation best;
};

/// Runs the five stages in order, each starting from the configurations
/// retained by the previous one. threads = 0 picks the hardware count.
[[nodiscard]] SweepResult staged_optimize(const StagePlan& plan, const SweepBench& bench, unsigned threads = 0);

/// One row per evaluation, in log order.
[[nodiscard]] std::string evaluations_csv(const SweepResult& result);

}  // namespace qccd
