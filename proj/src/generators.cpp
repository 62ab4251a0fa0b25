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
#include <cmath>
#include <numbers>
#include <numeric>

#include "qccd/circuit.hpp"
#include "qccd/rng.hpp"

namespace qccd {
namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

void qft_on(Circuit& c, const std::vector<int>& reg) {
  for (std::size_t i = 0; i < reg.size(); ++i) {
    c.add(GateType::H, reg[i]);
    for (std::size_t j = i + 1; j < reg.size(); ++j)
      c.add(GateType::CP, reg[j], reg[i], kPi / std::ldexp(1.0, static_cast<int>(j - i)));
  }
}

void inverse_qft_on(Circuit& c, const std::vector<int>& reg) {
  for (std::size_t i = reg.size(); i-- > 0;) {
    for (std::size_t j = reg.size(); j-- > i + 1;)
      c.add(GateType::CP, reg[j], reg[i], -kPi / std::ldexp(1.0, static_cast<int>(j - i)));
    c.add(GateType::H, reg[i]);
  }
}

void toffoli(Circuit& c, int a, int b, int t) {
  const double q = kPi / 4;
  c.add(GateType::H, t);
  c.add(GateType::CX, b, t);
  c.add(GateType::RZ, t, -q);
  c.add(GateType::CX, a, t);
  c.add(GateType::RZ, t, q);
  c.add(GateType::CX, b, t);
  c.add(GateType::RZ, t, -q);
  c.add(GateType::CX, a, t);
  c.add(GateType::RZ, b, q);
  c.add(GateType::RZ, t, q);
  c.add(GateType::H, t);
  c.add(GateType::CX, a, b);
  c.add(GateType::RZ, a, q);
  c.add(GateType::RZ, b, -q);
  c.add(GateType::CX, a, b);
}

void majority(Circuit& c, int carry, int b, int a) {
  c.add(GateType::CX, a, b);
  c.add(GateType::CX, a, carry);
  toffoli(c, carry, b, a);
}

void unmajority_add(Circuit& c, int carry, int b, int a) {
  toffoli(c, carry, b, a);
  c.add(GateType::CX, a, carry);
  c.add(GateType::CX, carry, b);
}

}  // namespace

Circuit generate_qft(int n) {
  require(n >= 2, "QFT needs at least 2 qubits");
  Circuit c{static_cast<std::size_t>(n), {}};
  std::vector<int> reg(static_cast<std::size_t>(n));
  std::iota(reg.begin(), reg.end(), 0);
  qft_on(c, reg);
  return c;
}

Circuit generate_qaoa_complete(int n) {
  require(n >= 2, "QAOA needs at least 2 qubits");
  const double gamma = 0.4;
  const double beta = 0.7;
  Circuit c{static_cast<std::size_t>(n), {}};
  for (int q = 0; q < n; ++q) c.add(GateType::H, q);
  // exp(-i gamma Z_i Z_j) equals rz(2 gamma) x rz(2 gamma) . cp(-4 gamma) up to
  // global phase; the local rz terms are merged per qubit after the cp layer.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c.add(GateType::CP, i, j, -4 * gamma);
  for (int q = 0; q < n; ++q) c.add(GateType::RZ, q, 2 * gamma * (n - 1));
  for (int q = 0; q < n; ++q) {
    c.add(GateType::H, q);
    c.add(GateType::RZ, q, 2 * beta);
    c.add(GateType::H, q);
  }
  return c;
}

Circuit generate_cuccaro(int n) {
  require(n >= 4 && n % 2 == 0, "Cuccaro adder needs an even qubit count >= 4");
  const int m = n / 2 - 1;
  Circuit c{static_cast<std::size_t>(n), {}};
  auto b = [](int i) { return 1 + 2 * i; };
  auto a = [](int i) { return 2 + 2 * i; };
  const int carry_in = 0;
  const int carry_out = n - 1;
  majority(c, carry_in, b(0), a(0));
  for (int i = 1; i < m; ++i) majority(c, a(i - 1), b(i), a(i));
  c.add(GateType::CX, a(m - 1), carry_out);
  for (int i = m - 1; i >= 1; --i) unmajority_add(c, a(i - 1), b(i), a(i));
  unmajority_add(c, carry_in, b(0), a(0));
  return c;
}

Circuit generate_draper(int n) {
  require(n >= 4 && n % 2 == 0, "Draper adder needs an even qubit count >= 4");
  const int m = n / 2;
  Circuit c{static_cast<std::size_t>(n), {}};
  std::vector<int> a(static_cast<std::size_t>(m));
  std::vector<int> b(static_cast<std::size_t>(m));
  std::iota(a.begin(), a.end(), 0);
  std::iota(b.begin(), b.end(), m);
  qft_on(c, b);
  // Register index 0 is the most significant bit.
  for (int i = 0; i < m; ++i)
    for (int k = i; k < m; ++k)
      c.add(GateType::CP, a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(i)],
            kPi / std::ldexp(1.0, k - i));
  inverse_qft_on(c, b);
  return c;
}

Circuit generate_random(int n, int layers, double repeat_bias, std::uint64_t seed) {
  require(n >= 2 && n % 2 == 0, "random circuit needs an even qubit count");
  require(layers >= 0, "layer count must be non-negative");
  require(repeat_bias >= 0.0 && repeat_bias <= 1.0, "repeat_bias must lie in [0, 1]");
  Rng rng(seed);
  Circuit c{static_cast<std::size_t>(n), {}};
  std::vector<std::pair<int, int>> matching;
  // Survivors per layer are a fixed count, bias * pairs with the fractional
  // part carried to the next layer; which pairs survive is random.
  double carry = 0.0;
  for (int layer = 0; layer < layers; ++layer) {
    std::vector<std::pair<int, int>> next;
    std::vector<int> loose;
    if (layer == 0) {
      loose.resize(static_cast<std::size_t>(n));
      std::iota(loose.begin(), loose.end(), 0);
    } else {
      double wanted = repeat_bias * static_cast<double>(matching.size()) + carry;
      auto keep = std::min(matching.size(), static_cast<std::size_t>(std::floor(wanted)));
      carry = wanted - static_cast<double>(keep);
      rng.shuffle(std::span<std::pair<int, int>>(matching));
      for (std::size_t i = 0; i < matching.size(); ++i) {
        if (i < keep) {
          next.push_back(matching[i]);
        } else {
          loose.push_back(matching[i].first);
          loose.push_back(matching[i].second);
        }
      }
    }
    rng.shuffle(std::span<int>(loose));
    for (std::size_t i = 0; i + 1 < loose.size(); i += 2) next.emplace_back(loose[i], loose[i + 1]);
    for (auto [x, y] : next) c.add(GateType::CX, x, y);
    matching = std::move(next);
  }
  return c;
}

Circuit generate_benchmark(const std::string& name, int n, std::uint64_t seed) {
  if (name == "qft") return generate_qft(n);
  if (name == "qaoa") return generate_qaoa_complete(n);
  if (name == "cuccaro" || name == "ca") return generate_cuccaro(n);
  if (name == "draper" || name == "da") return generate_draper(n);
  if (name == "rnd10") return generate_random(n, n, kRnd10RepeatBias, seed);
  if (name == "rnd80") return generate_random(n, n, kRnd80RepeatBias, seed);
  throw std::invalid_argument("unknown benchmark '" + name + "'");
}

Circuit relabel_qubits(const Circuit& circuit, std::uint64_t seed) {
  std::vector<std::uint32_t> perm(circuit.num_qubits);
  std::iota(perm.begin(), perm.end(), 0u);
  Rng rng(seed);
  rng.shuffle(std::span<std::uint32_t>(perm));
  Circuit out{circuit.num_qubits, {}};
  for (const Gate& g : circuit.gates) {
    if (g.two_qubit())
      out.add(g.type, QubitId(perm[g.qubits[0].index()]), QubitId(perm[g.qubits[1].index()]), g.angle);
    else
      out.add(g.type, QubitId(perm[g.qubits[0].index()]), g.angle);
  }
  return out;
}

}  // namespace qccd
