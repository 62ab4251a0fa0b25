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

#include <cmath>
#include <fstream>

#include "qccd/config.hpp"

using namespace qccd;
using Catch::Matchers::ContainsSubstring;

namespace {

const char* kBase = R"(
seed = 9
[topology]
kind = "linear"
traps = 4
capacity = 3
[circuit]
generator = "qft"
qubits = 8
)";

RunConfig with(const std::string& extra) { return parse_config(std::string(kBase) + extra); }

}  // namespace

TEST_CASE("toml values", "[config]") {
  auto doc = parse_toml(R"(
top = 1   # trailing comment
[a]
s = "x # not a comment"
i = -4
f = 2.5e-3
b = true
n = -inf
list = [1, 2.5, "three"]
nested = [[0, 1], [1, 2]]
empty = []
)");
  CHECK(doc["top"] == 1);
  CHECK(doc["a"]["s"] == "x # not a comment");
  CHECK(doc["a"]["i"] == -4);
  CHECK(doc["a"]["f"] == 2.5e-3);
  CHECK(doc["a"]["b"] == true);
  CHECK(std::isinf(doc["a"]["n"].get<double>()));
  CHECK(doc["a"]["n"].get<double>() < 0);
  CHECK(doc["a"]["list"].size() == 3);
  CHECK(doc["a"]["nested"][1][0] == 1);
  CHECK(doc["a"]["empty"].empty());
}

TEST_CASE("toml errors name the line", "[config]") {
  CHECK_THROWS_WITH(parse_toml("a = 1\nb = \n"), ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(parse_toml("[x]\na = 1\na = 2\n"), ContainsSubstring("duplicate key"));
  CHECK_THROWS_WITH(parse_toml("[x]\n[x]\n"), ContainsSubstring("duplicate section"));
  CHECK_THROWS_WITH(parse_toml("[x\n"), ContainsSubstring("line 1"));
  CHECK_THROWS_AS(parse_toml("a = \"open\n"), ConfigError);
  CHECK_THROWS_AS(parse_toml("a = [1, 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_toml("just words\n"), ConfigError);
}

TEST_CASE("a route config", "[config]") {
  auto cfg = with("[weights]\nalpha_shuttle = 65\nthreshold = -inf\n[physics]\nT2 = 1e5\n[output]\ndir = \"/tmp/x\"\n");
  CHECK(cfg.seed == 9);
  CHECK(cfg.topology.kind == TopologyKind::Linear);
  CHECK(cfg.topology.build().num_traps() == 4);
  CHECK(cfg.circuit.generator == "qft");
  REQUIRE(cfg.weights);
  CHECK(cfg.weights->alpha_shuttle == 65);
  CHECK(cfg.weights->lambda_swap == 1);
  CHECK(std::isinf(cfg.weights->threshold));
  CHECK_FALSE(cfg.sweep);
  CHECK(cfg.physics.T2 == 1e5);
  CHECK(cfg.physics.t_2q == PhysicsParams{}.t_2q);
  CHECK(cfg.out_dir == "/tmp/x");
  CHECK(cfg.circuit.load(cfg.seed).two_qubit_count() == 28);
}

TEST_CASE("a sweep config", "[config]") {
  auto cfg = with("[sweep]\npoints = 3\nswap = [1, 5]\nthreshold_grid = [-100, -50]\nretain_k = 4\nthreads = 2\n");
  REQUIRE(cfg.sweep);
  CHECK_FALSE(cfg.weights);
  CHECK(cfg.sweep->swap_grid == std::vector<double>{1, 3, 5});
  CHECK(cfg.sweep->threshold_grid == std::vector<double>{-100, -50});
  CHECK(cfg.sweep->shuttle_grid == linspace(30, 180, 3));
  CHECK(cfg.sweep->retain_k == 4);
  CHECK(cfg.threads == 2);
  CHECK_THROWS_WITH(with("[sweep]\nswap = [1, 5]\nswap_grid = [1]\n"), ContainsSubstring("either"));
  CHECK_THROWS_AS(with("[sweep]\nswap = [1, 2, 3]\n"), ConfigError);
  CHECK_THROWS_AS(with("[sweep]\nretain_k = 0\n"), ConfigError);
}

TEST_CASE("weights and sweep are exclusive", "[config]") {
  CHECK_THROWS_WITH(with("[weights]\n[sweep]\n"), ContainsSubstring("exactly one"));
  CHECK_THROWS_WITH(with(""), ContainsSubstring("exactly one"));
}

TEST_CASE("other topologies", "[config]") {
  const char* tail = "[circuit]\ngenerator = \"qft\"\nqubits = 4\n[weights]\n";
  auto grid = parse_config(std::string("[topology]\nkind = \"grid\"\nrows = 2\ncols = 3\ncapacity = 2\n") + tail);
  CHECK(grid.topology.build().num_traps() == 6);
  auto ring = parse_config(std::string("[topology]\nkind = \"ring\"\ntraps = 5\ncapacity = 2\n") + tail);
  CHECK(ring.topology.build().junctions().size() == 5);
  auto custom = parse_config(
      std::string("[topology]\nkind = \"custom\"\ncapacities = [2, 3, 2]\nlinks = [[0, 1], [1, 2], [0, 2]]\n") + tail);
  auto m = custom.topology.build();
  CHECK(m.capacity(TrapId(1)) == 3);
  CHECK(m.junctions().size() == 3);
  CHECK_THROWS_AS(
      parse_config(std::string("[topology]\nkind = \"custom\"\ncapacities = [2, 2]\nlinks = [[0, 0]]\n") + tail)
          .topology.build(),
      ConfigError);
  CHECK_THROWS_AS(parse_config(std::string("[topology]\nkind = \"torus\"\n") + tail), ConfigError);
}

TEST_CASE("unknown and misplaced keys are rejected", "[config]") {
  CHECK_THROWS_WITH(with("[weights]\nalpha = 1\n"), ContainsSubstring("alpha"));
  CHECK_THROWS_AS(with("[weights]\n[extras]\n"), ConfigError);
  CHECK_THROWS_AS(with("[weights]\nlambda_swap = \"big\"\n"), ConfigError);
  CHECK_THROWS_AS(with("[weights]\nlambda_swap = -1\n"), ConfigError);
  CHECK_THROWS_AS(with("[weights]\n[physics]\nT2 = 0\n"), ConfigError);
  CHECK_THROWS_AS(with("[weights]\n[placement]\nstrategy = \"spiral\"\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("seed = -1\n[topology]\nkind = \"linear\"\ntraps = 1\ncapacity = 1\n"), ConfigError);
  CHECK_THROWS_WITH(parse_config("[circuit]\ngenerator = \"qft\"\nqubits = 4\n[weights]\n"),
                    ContainsSubstring("[topology]"));
}

TEST_CASE("circuit sources", "[config]") {
  auto dir = std::filesystem::temp_directory_path() / "qccd_config_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "bell.qasm");
    f << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\nh q[0];\ncx q[0],q[1];\n";
  }
  auto text = std::string("[topology]\nkind = \"linear\"\ntraps = 1\ncapacity = 2\n[circuit]\nfile = \"bell.qasm\"\n[weights]\n");
  auto cfg = parse_config(text, dir);
  REQUIRE(cfg.circuit.file);
  CHECK(cfg.circuit.load(1).gates.size() == 2);

  auto missing = parse_config(text, dir / "elsewhere");
  CHECK_THROWS_WITH(missing.circuit.load(1), ContainsSubstring("not found"));

  auto random = with("[weights]\n").circuit;
  random.generator = "random";
  random.qubits = 6;
  random.layers = 4;
  CHECK(to_qasm(random.load(3)) == to_qasm(random.load(3)));
  random.relabel = true;
  CHECK(random.load(3).two_qubit_count() == 12);
  std::filesystem::remove_all(dir);
}
