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

#include "qccd/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>
#include <optional>
#include <tuple>

#include "qccd/router.hpp"

namespace qccd {

std::string to_string(Stage stage) {
  switch (stage) {
    case Stage::SwapAndShuttle: return "swap_and_shuttle";
    case Stage::Threshold: return "threshold";
    case Stage::Parallelism: return "parallelism";
    case Stage::FutureOps: return "future_ops";
    case Stage::ExcessCapacity: return "excess_capacity";
  }
  return "unknown";
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points == 0) throw std::invalid_argument("a grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  out.back() = hi;
  return out;
}

StagePlan StagePlan::defaults(std::size_t points) {
  StagePlan plan;
  plan.swap_grid = linspace(1, 65, points);
  plan.shuttle_grid = linspace(30, 180, points);
  plan.threshold_grid = linspace(-350, -60, points);
  plan.parallelism_grid = linspace(1, 20, points);
  plan.future_ops_grid = linspace(1, 20, points);
  plan.excess_capacity_grid = linspace(1, 20, points);
  return plan;
}

void StagePlan::validate() const {
  for (const auto* g : {&swap_grid, &shuttle_grid, &threshold_grid, &parallelism_grid, &future_ops_grid,
                        &excess_capacity_grid})
    if (g->empty()) throw std::invalid_argument("sweep grids must be non-empty");
  if (retain_k < 1) throw std::invalid_argument("retain_k must be at least 1");
  seed.validate();
}

namespace {

auto weight_key(const ScoreWeights& w) {
  return std::make_tuple(w.alpha_shuttle, w.lambda_swap, w.beta_future, w.sigma_capacity, w.gamma_parallel,
                         w.threshold, w.lookahead_layers);
}

/// Weight configurations a stage evaluates for one carried configuration.
std::vector<ScoreWeights> expand(Stage stage, const ScoreWeights& base, const StagePlan& plan) {
  std::vector<ScoreWeights> out;
  auto one_d = [&](const std::vector<double>& grid, double ScoreWeights::*field) {
    for (double v : grid) {
      ScoreWeights w = base;
      w.*field = v;
      out.push_back(w);
    }
  };
  switch (stage) {
    case Stage::SwapAndShuttle:
      for (double swap : plan.swap_grid)
        for (double shuttle : plan.shuttle_grid) {
          ScoreWeights w = base;
          w.lambda_swap = swap;
          w.alpha_shuttle = shuttle;
          out.push_back(w);
        }
      break;
    case Stage::Threshold: one_d(plan.threshold_grid, &ScoreWeights::threshold); break;
    case Stage::Parallelism: one_d(plan.parallelism_grid, &ScoreWeights::gamma_parallel); break;
    case Stage::FutureOps: one_d(plan.future_ops_grid, &ScoreWeights::beta_future); break;
    case Stage::ExcessCapacity: one_d(plan.excess_capacity_grid, &ScoreWeights::sigma_capacity); break;
  }
  return out;
}

}  // namespace

bool ranks_before(const Evaluation& a, const Evaluation& b) {
  if (a.metrics.total_fidelity != b.metrics.total_fidelity) return a.metrics.total_fidelity > b.metrics.total_fidelity;
  if (a.movement_ops() != b.movement_ops()) return a.movement_ops() < b.movement_ops();
  return weight_key(a.weights) < weight_key(b.weights);
}

Evaluation evaluate(const SweepBench& bench, const ScoreWeights& weights) {
  Evaluation e;
  e.weights = weights;
  try {
    ExecutionTrace trace = route(bench.dag, bench.machine, weights, bench.initial);
    e.metrics = accumulate_fidelity(bench.machine, trace, bench.physics);
  } catch (const RoutingError&) {
    e.ok = false;
    e.metrics = RunMetrics{};
    e.metrics.gate_fidelity_product = e.metrics.total_fidelity = 0.0;
  }
  return e;
}

std::vector<Evaluation> run_stage(Stage stage, const std::vector<ScoreWeights>& carried, const StagePlan& plan,
                                  const SweepBench& bench, unsigned threads) {
  std::vector<ScoreWeights> points;
  for (const ScoreWeights& base : carried) {
    auto more = expand(stage, base, plan);
    points.insert(points.end(), more.begin(), more.end());
  }
  std::vector<Evaluation> out(points.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      out[i] = evaluate(bench, points[i]);
      out[i].stage = stage;
      out[i].index = i;
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<Evaluation> retain(const std::vector<Evaluation>& stage_evals, const Evaluation* incumbent,
                               std::size_t retain_k) {
  std::vector<Evaluation> pool = stage_evals;
  std::sort(pool.begin(), pool.end(), ranks_before);
  std::vector<Evaluation> kept;
  for (const Evaluation& e : pool) {
    if (kept.size() == retain_k) break;
    bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Evaluation& k) { return k.weights == e.weights; });
    if (!duplicate) kept.push_back(e);
  }
  if (incumbent) {
    bool present = std::any_of(kept.begin(), kept.end(), [&](const Evaluation& k) { return k.weights == incumbent->weights; });
    if (!present) {
      kept.push_back(*incumbent);
      std::sort(kept.begin(), kept.end(), ranks_before);
      if (kept.size() > retain_k && !(kept.back().weights == incumbent->weights)) kept.pop_back();
    }
  }
  return kept;
}

SweepResult staged_optimize(const StagePlan& plan, const SweepBench& bench, unsigned threads) {
  plan.validate();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  SweepResult result;
  std::vector<ScoreWeights> carried{plan.seed};
  std::optional<Evaluation> incumbent;

  for (Stage stage : kStageOrder) {
    std::vector<Evaluation> evals = run_stage(stage, carried, plan, bench, threads);
    StageSummary summary;
    summary.stage = stage;
    auto [lo, hi] = std::minmax_element(evals.begin(), evals.end(), [](const Evaluation& a, const Evaluation& b) {
      return a.metrics.total_fidelity < b.metrics.total_fidelity;
    });
    summary.no_impact = hi->metrics.total_fidelity - lo->metrics.total_fidelity <= 1e-9;
    summary.retained = retain(evals, incumbent ? &*incumbent : nullptr, plan.retain_k);
    incumbent = summary.retained.front();
    summary.best_fidelity = incumbent->metrics.total_fidelity;

    carried.clear();
    for (const Evaluation& e : summary.retained) carried.push_back(e.weights);
    result.evaluations.insert(result.evaluations.end(), evals.begin(), evals.end());
    result.stages.push_back(std::move(summary));
  }
  result.best = *incumbent;
  return result;
}

std::string evaluations_csv(const SweepResult& result) {
  std::ostringstream os;
  os << "stage,index,alpha_shuttle,lambda_swap,beta_future,sigma_capacity,gamma_parallel,threshold,"
        "lookahead_layers,shuttles,swaps,depth,exec_time_us,coherence,fidelity,status\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  for (const Evaluation& e : result.evaluations) {
    const ScoreWeights& w = e.weights;
    const RunMetrics& m = e.metrics;
    os << to_string(e.stage) << ',' << e.index << ',' << num(w.alpha_shuttle) << ',' << num(w.lambda_swap) << ','
       << num(w.beta_future) << ',' << num(w.sigma_capacity) << ',' << num(w.gamma_parallel) << ','
       << num(w.threshold) << ',' << w.lookahead_layers << ',' << m.shuttle_count << ',' << m.swap_count << ','
       << m.depth << ',' << num(m.exec_time_us) << ',' << num(m.coherence_factor) << ','
       << num(m.total_fidelity) << ',' << (e.ok ? "ok" : "routing_failed") << '\n';
  }
  return os.str();
}

}  // namespace qccd
