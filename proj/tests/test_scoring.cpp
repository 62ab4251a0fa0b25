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

#include <catch_amalgamated.hpp>

#include "qccd/rng.hpp"
#include "qccd/scoring.hpp"

using namespace qccd;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<QubitId> ids(std::initializer_list<int> v) {
  std::vector<QubitId> out;
  for (int q : v) out.push_back(QubitId(q));
  return out;
}

IonConfiguration chains(std::initializer_list<std::initializer_list<int>> traps, std::size_t n) {
  std::vector<std::vector<QubitId>> c;
  for (auto t : traps) c.push_back(ids(t));
  return IonConfiguration::from_chains(std::move(c), n);
}

TrapScore random_components(Rng& rng) {
  TrapScore s;
  s.shuttles = static_cast<int>(rng.below(10));
  s.swaps = static_cast<int>(rng.below(30));
  s.future_ops = static_cast<double>(rng.below(40));
  s.excess_capacity = static_cast<int>(rng.below(12)) - 6;
  s.parallelism = rng.bernoulli(0.5) ? 1 : -1;
  return s;
}

ScoreWeights random_weights(Rng& rng) {
  ScoreWeights w;
  w.alpha_shuttle = rng.uniform() * 200;
  w.lambda_swap = rng.uniform() * 70;
  w.beta_future = rng.uniform() * 20;
  w.sigma_capacity = rng.uniform() * 20;
  w.gamma_parallel = rng.uniform() * 20;
  return w;
}

}  // namespace

TEST_CASE("future operations score", "[scoring]") {
  auto config = chains({{0, 1}, {2}}, 3);
  Lookahead none(3, 3);
  CHECK(future_ops_score(QubitId(0), TrapId(0), none, config) == 0.0);

  Lookahead one(3, 3);
  one.add(1, QubitId(2), QubitId(1));
  CHECK(future_ops_score(QubitId(2), TrapId(0), one, config) == 2.0);
  CHECK(future_ops_score(QubitId(2), TrapId(1), one, config) == 0.0);

  Lookahead two(3, 3);
  two.add(1, QubitId(2), QubitId(1));
  two.add(2, QubitId(2), QubitId(1));
  CHECK(future_ops_score(QubitId(2), TrapId(0), two, config) == 3.0);

  // Layers outside 1..L carry no weight.
  Lookahead edge(3, 3);
  edge.add(0, QubitId(2), QubitId(1));
  edge.add(3, QubitId(2), QubitId(1));
  edge.add(4, QubitId(2), QubitId(1));
  CHECK(future_ops_score(QubitId(2), TrapId(0), edge, config) == 0.0);

  // A partner assumed to arrive counts as present.
  const QubitId assumed[] = {QubitId(2)};
  CHECK(future_ops_score(QubitId(1), TrapId(1), one, config, assumed) == 2.0);
}

TEST_CASE("lookahead layers count from the frontier", "[scoring]") {
  Circuit c{4, {}};
  c.add(GateType::CX, 0, 1);
  c.add(GateType::H, 1);
  c.add(GateType::CX, 1, 2);
  c.add(GateType::CX, 2, 3);
  c.add(GateType::CX, 0, 3);
  GateDag dag(c);
  Lookahead look(dag, std::vector<bool>(dag.size(), false), 7);
  REQUIRE(look.entries(QubitId(1)).size() == 1);
  CHECK(look.entries(QubitId(1))[0].layer == 1);
  CHECK(look.entries(QubitId(1))[0].partner == QubitId(2));
  REQUIRE(look.entries(QubitId(3)).size() == 2);
  CHECK(look.entries(QubitId(3))[0].layer == 2);
  CHECK(look.entries(QubitId(3))[1].layer == 3);

  std::vector<bool> done(dag.size(), false);
  done[0] = done[1] = true;
  Lookahead later(dag, done, 7);
  CHECK(later.entries(QubitId(1)).empty());
  CHECK(later.entries(QubitId(3))[0].layer == 1);
}

TEST_CASE("movement counts", "[scoring]") {
  auto line2 = build_linear(2, 4);
  auto config = chains({{0, 2, 1}, {3, 4, 5}}, 6);
  const TrapPath same{TrapId(0)};
  CHECK(movement_counts(QubitId(0), QubitId(1), same, TrapId(0), line2, config) == MovementCounts{0, 0});

  // Ion 2 sits one place away from the chain end facing trap 1.
  const TrapPath across{TrapId(0), TrapId(1)};
  CHECK(movement_counts(QubitId(2), QubitId(3), across, TrapId(1), line2, config) == MovementCounts{1, 1});
  // Ion 3 already faces trap 0.
  CHECK(movement_counts(QubitId(2), QubitId(3), across, TrapId(0), line2, config) == MovementCounts{1, 0});

  auto line3 = build_linear(3, 4);
  auto through = chains({{0}, {1, 2, 3}, {4}}, 5);
  const TrapPath long_path{TrapId(0), TrapId(1), TrapId(2)};
  CHECK(movement_counts(QubitId(0), QubitId(4), long_path, TrapId(2), line3, through) == MovementCounts{2, 3});
  CHECK(movement_counts(QubitId(0), QubitId(4), long_path, TrapId(1), line3, through) == MovementCounts{2, 0});
  CHECK_THROWS_AS(movement_counts(QubitId(0), QubitId(4), across, TrapId(2), line3, through), std::invalid_argument);
}

TEST_CASE("excess capacity score", "[scoring]") {
  CHECK(excess_capacity_score(6, 3, 1) == 2);
  CHECK(excess_capacity_score(6, 6, 1) == -6);
  CHECK(excess_capacity_score(6, 5, 1) == 0);
  CHECK(excess_capacity_score(6, 0, 2) == 4);
  auto g = build_linear(2, 3);
  auto config = chains({{0, 1}, {2}}, 3);
  CHECK(excess_capacity_score(TrapId(0), g, config, 1) == 0);
  CHECK(excess_capacity_score(TrapId(1), g, config, 1) == 1);
  CHECK(excess_capacity_score(TrapId(0), g, config, 2) == -3);
}

TEST_CASE("parallelism score", "[scoring]") {
  CHECK(parallelism_score(false) == 1);
  CHECK(parallelism_score(true) == -1);
}

TEST_CASE("trap score arithmetic", "[scoring]") {
  ScoreWeights ones;
  TrapScore s;
  s.shuttles = 2;
  s.swaps = 3;
  s.future_ops = 1;
  s.excess_capacity = 2;
  s.parallelism = 1;
  CHECK(with_total(s, ones).total == -1.0);

  ScoreWeights shuttle_only{65, 0, 0, 0, 0, -350, 7};
  TrapScore h;
  h.shuttles = 2;
  CHECK(with_total(h, shuttle_only).total == -130.0);

  auto g = build_linear(2, 2);
  auto config = chains({{0, 1}, {}}, 2);
  Lookahead empty(2, 7);
  TrapScore co = trap_score(QubitId(0), QubitId(1), TrapId(0), {TrapId(0)}, g, config, empty, false, ones);
  CHECK(co.shuttles == 0);
  CHECK(co.swaps == 0);
  CHECK(co.excess_capacity == 0);
  CHECK(co.parallelism == 1);
  CHECK(co.total == 1.0);
}

TEST_CASE("trap score sums both operands' future work", "[scoring]") {
  auto g = build_linear(2, 4);
  auto config = chains({{0, 1}, {2, 3}}, 4);
  Lookahead look(4, 3);
  look.add(1, QubitId(0), QubitId(2));
  look.add(1, QubitId(1), QubitId(3));
  ScoreWeights w;
  TrapScore s = trap_score(QubitId(0), QubitId(1), TrapId(0), {TrapId(0)}, g, config, look, true, w);
  CHECK(s.future_ops == 0.0);
  CHECK(s.parallelism == -1);
  CHECK(s.excess_capacity == 2);
  CHECK(s.total == 1.0);
  TrapScore across = trap_score(QubitId(0), QubitId(2), TrapId(1), {TrapId(0), TrapId(1)}, g, config, look, false, w);
  // Each operand sees the other as present in trap 1.
  CHECK(across.shuttles == 1);
  CHECK(across.swaps == 1);
  CHECK(across.excess_capacity == 1);
  CHECK(across.future_ops == 4.0);
}

TEST_CASE("bottleneck score", "[scoring]") {
  auto g = build_linear(2, 4);
  Lookahead none(4, 3);
  auto config = chains({{0, 1, 2}, {}}, 3);
  const TrapId hop[] = {TrapId(0), TrapId(1)};
  CHECK(bottleneck_score(QubitId(2), hop, g, config, none) == -1.0);
  CHECK(bottleneck_score(QubitId(0), hop, g, config, none) == -3.0);

  auto with_partner = chains({{0, 1}, {2}}, 3);
  Lookahead look(3, 3);
  look.add(1, QubitId(1), QubitId(2));
  CHECK(bottleneck_score(QubitId(1), hop, g, with_partner, look) == 1.0);
}

TEST_CASE("trap score is monotone in each component", "[scoring][property]") {
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    ScoreWeights w = random_weights(rng);
    TrapScore base = with_total(random_components(rng), w);
    TrapScore more = base;
    more.shuttles += 1 + static_cast<int>(rng.below(3));
    CHECK(weighted_total(more, w) <= base.total);
    more = base;
    more.swaps += 1 + static_cast<int>(rng.below(5));
    CHECK(weighted_total(more, w) <= base.total);
    more = base;
    more.future_ops += 1 + static_cast<double>(rng.below(5));
    CHECK(weighted_total(more, w) >= base.total);
    more = base;
    more.excess_capacity += 1 + static_cast<int>(rng.below(5));
    CHECK(weighted_total(more, w) >= base.total);
    more = base;
    more.parallelism = 1;
    CHECK(weighted_total(more, w) >= weighted_total(with_total([&] { auto t = base; t.parallelism = -1; return t; }(), w), w));
  }
}

TEST_CASE("uniform weight scaling preserves the best trap", "[scoring][property]") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    ScoreWeights w = random_weights(rng);
    double c = 0.01 + rng.uniform() * 50;
    ScoreWeights scaled = w;
    scaled.alpha_shuttle *= c;
    scaled.lambda_swap *= c;
    scaled.beta_future *= c;
    scaled.sigma_capacity *= c;
    scaled.gamma_parallel *= c;
    std::vector<TrapScore> candidates(2 + rng.below(8));
    for (auto& s : candidates) s = random_components(rng);
    std::size_t best = 0;
    std::size_t best_scaled = 0;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      double t = weighted_total(candidates[k], w);
      double ts = weighted_total(candidates[k], scaled);
      CHECK_THAT(ts, WithinAbs(c * t, 1e-9 * (1 + std::abs(c * t))));
      if (t > weighted_total(candidates[best], w)) best = k;
      if (ts > weighted_total(candidates[best_scaled], scaled)) best_scaled = k;
    }
    // Near-ties can flip under rounding; compare totals, not indices.
    CHECK_THAT(weighted_total(candidates[best_scaled], w),
               WithinAbs(weighted_total(candidates[best], w), 1e-9 * (1 + std::abs(weighted_total(candidates[best], w)))));
  }
}

TEST_CASE("co-located idle trap scores sigma times EC plus gamma", "[scoring][property]") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    int cap = 2 + static_cast<int>(rng.below(8));
    int extra = static_cast<int>(rng.below(static_cast<std::uint64_t>(cap - 1)));
    std::vector<QubitId> chain{QubitId(0), QubitId(1)};
    for (int e = 0; e < extra; ++e) chain.push_back(QubitId(2 + e));
    auto config = IonConfiguration::from_chains({chain, {}}, chain.size());
    auto g = build_linear(2, cap);
    ScoreWeights w = random_weights(rng);
    Lookahead empty(chain.size(), 7);
    TrapScore s = trap_score(QubitId(0), QubitId(1), TrapId(0), {TrapId(0)}, g, config, empty, false, w);
    CHECK_THAT(s.total, WithinAbs(w.sigma_capacity * s.excess_capacity + w.gamma_parallel, 1e-9));
    CHECK(s.total >= 0.0);
  }
}

TEST_CASE("bottleneck score ignores the weights", "[scoring][property]") {
  Rng rng(9);
  auto g = build_linear(3, 6);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::vector<QubitId>> c(3);
    for (int q = 0; q < 9; ++q) c[rng.below(3)].push_back(QubitId(q));
    auto config = IonConfiguration::from_chains(c, 9);
    Lookahead look(9, 7);
    for (int k = 0; k < 6; ++k) {
      int a = static_cast<int>(rng.below(9));
      int b = static_cast<int>(rng.below(8));
      if (b >= a) ++b;
      look.add(1 + static_cast<int>(rng.below(6)), QubitId(a), QubitId(b));
    }
    QubitId q(static_cast<int>(rng.below(9)));
    TrapId from = config.trap_of(q);
    TrapId to = from.value == 2 ? TrapId(1) : TrapId(from.value + 1);
    const TrapId hop[] = {from, to};
    MovementCounts m = single_ion_movement(q, hop, g, config);
    const QubitId self[] = {q};
    double expected = -m.shuttles - m.swaps + future_ops_score(q, to, look, config, self);
    CHECK(bottleneck_score(q, hop, g, config, look) == expected);
  }
}

TEST_CASE("weights validation", "[scoring]") {
  ScoreWeights w;
  CHECK_NOTHROW(w.validate());
  w.lookahead_layers = 0;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
  w = ScoreWeights{};
  w.lambda_swap = -1;
  CHECK_THROWS_AS(w.validate(), std::invalid_argument);
}
