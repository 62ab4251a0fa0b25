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

#include "qccd/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace qccd {
namespace {

using nlohmann::json;

class ValueParser {
 public:
  ValueParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  json parse_all() {
    json v = value();
    skip_space();
    if (pos_ != s_.size()) error("unexpected trailing characters");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw ConfigError("line " + std::to_string(line_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  bool consume_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  json value() {
    skip_space();
    if (pos_ >= s_.size()) error("missing value");
    char c = s_[pos_];
    if (c == '"') return string();
    if (c == '[') return array();
    if (consume_word("true")) return true;
    if (consume_word("false")) return false;
    if (consume_word("inf") || consume_word("+inf")) return std::numeric_limits<double>::infinity();
    if (consume_word("-inf")) return -std::numeric_limits<double>::infinity();
    return number();
  }

  json string() {
    std::string out;
    ++pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      char c = s_[pos_++];
      if (c == '\\') {
        if (pos_ >= s_.size()) break;
        char e = s_[pos_++];
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: error(std::string("unknown escape \\") + e);
        }
      } else {
        out += c;
      }
    }
    if (pos_ >= s_.size()) error("unterminated string");
    ++pos_;
    return out;
  }

  json array() {
    json out = json::array();
    ++pos_;
    for (;;) {
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return out;
      }
      out.push_back(value());
      skip_space();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
      } else if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return out;
      } else {
        error("expected ',' or ']' in array");
      }
    }
  }

  json number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                s_[pos_] == '-' || s_[pos_] == '+'))
      ++pos_;
    std::string token(s_.substr(start, pos_ - start));
    if (token.empty()) error("invalid value");
    bool integral = token.find_first_of(".eE") == std::string::npos;
    if (integral) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(token.data() + (token[0] == '+'), token.data() + token.size(), v);
      if (ec == std::errc() && ptr == token.data() + token.size()) return v;
    } else {
      char* end = nullptr;
      double v = std::strtod(token.c_str(), &end);
      if (end == token.c_str() + token.size()) return v;
    }
    error("invalid value '" + token + "'");
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"' && (i == 0 || line[i - 1] != '\\')) in_string = !in_string;
    if (line[i] == '#' && !in_string) return line.substr(0, i);
  }
  return line;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

// Typed accessors over one section.
class Section {
 public:
  Section(const json& j, std::string name) : j_(j), name_(std::move(name)) {}

  void allow(std::initializer_list<const char*> keys) const {
    std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [k, v] : j_.items())
      if (!ok.count(k)) throw ConfigError("unknown key '" + k + "' in " + where());
  }
  bool has(const char* key) const { return j_.contains(key); }

  double number(const char* key, double fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number()) throw ConfigError(where() + "." + key + " must be a number");
    return v.get<double>();
  }
  std::int64_t integer(const char* key, std::int64_t fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_number_integer()) throw ConfigError(where() + "." + key + " must be an integer");
    return v.get<std::int64_t>();
  }
  std::string string(const char* key, const std::string& fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_string()) throw ConfigError(where() + "." + key + " must be a string");
    return v.get<std::string>();
  }
  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (!v.is_boolean()) throw ConfigError(where() + "." + key + " must be true or false");
    return v.get<bool>();
  }
  std::vector<double> numbers(const char* key) const {
    const json& v = j_.at(key);
    if (!v.is_array()) throw ConfigError(where() + "." + key + " must be an array");
    std::vector<double> out;
    for (const json& x : v) {
      if (!x.is_number()) throw ConfigError(where() + "." + key + " must hold numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }
  const json& raw(const char* key) const { return j_.at(key); }

 private:
  std::string where() const { return name_.empty() ? "top level" : "[" + name_ + "]"; }
  const json& j_;
  std::string name_;
};

int positive_int(const Section& s, const char* key) {
  std::int64_t v = s.integer(key, 0);
  if (v < 1 || v > 1'000'000) throw ConfigError(std::string("topology.") + key + " must be a positive integer");
  return static_cast<int>(v);
}

TopologySpec read_topology(const Section& s) {
  s.allow({"kind", "traps", "capacity", "rows", "cols", "capacities", "links"});
  TopologySpec t;
  try {
    t.kind = topology_kind_from_string(s.string("kind", "linear"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  switch (t.kind) {
    case TopologyKind::Linear:
    case TopologyKind::Ring:
      t.traps = positive_int(s, "traps");
      t.capacity = positive_int(s, "capacity");
      break;
    case TopologyKind::Grid:
      t.rows = positive_int(s, "rows");
      t.cols = positive_int(s, "cols");
      t.capacity = positive_int(s, "capacity");
      break;
    case TopologyKind::Custom: {
      if (!s.has("capacities")) throw ConfigError("custom topology needs 'capacities'");
      for (double c : s.numbers("capacities")) t.capacities.push_back(static_cast<int>(c));
      if (s.has("links")) {
        for (const json& link : s.raw("links")) {
          if (!link.is_array() || link.size() != 2 || !link[0].is_number_integer() || !link[1].is_number_integer())
            throw ConfigError("topology.links entries must be [a, b] integer pairs");
          t.links.emplace_back(link[0].get<int>(), link[1].get<int>());
        }
      }
      break;
    }
  }
  return t;
}

CircuitSpec read_circuit(const Section& s, const std::filesystem::path& base_dir) {
  s.allow({"file", "generator", "qubits", "layers", "repeat_bias", "relabel"});
  CircuitSpec c;
  if (s.has("file") == s.has("generator")) throw ConfigError("[circuit] needs exactly one of 'file' and 'generator'");
  if (s.has("file")) {
    std::filesystem::path p = s.string("file", "");
    c.file = p.is_relative() ? base_dir / p : p;
  } else {
    c.generator = s.string("generator", "");
    c.qubits = static_cast<int>(s.integer("qubits", 0));
    if (c.qubits < 1) throw ConfigError("[circuit] generator needs a positive 'qubits'");
  }
  c.layers = static_cast<int>(s.integer("layers", c.qubits));
  c.repeat_bias = s.number("repeat_bias", 0.5);
  c.relabel = s.boolean("relabel", false);
  return c;
}

ScoreWeights read_weights(const Section& s) {
  s.allow({"alpha_shuttle", "lambda_swap", "beta_future", "sigma_capacity", "gamma_parallel", "threshold",
           "lookahead_layers"});
  ScoreWeights w;
  w.alpha_shuttle = s.number("alpha_shuttle", w.alpha_shuttle);
  w.lambda_swap = s.number("lambda_swap", w.lambda_swap);
  w.beta_future = s.number("beta_future", w.beta_future);
  w.sigma_capacity = s.number("sigma_capacity", w.sigma_capacity);
  w.gamma_parallel = s.number("gamma_parallel", w.gamma_parallel);
  w.threshold = s.number("threshold", w.threshold);
  w.lookahead_layers = static_cast<int>(s.integer("lookahead_layers", w.lookahead_layers));
  try {
    w.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return w;
}

StagePlan read_sweep(const Section& s, unsigned& threads) {
  s.allow({"points", "retain_k", "threads", "swap", "shuttle", "threshold", "parallelism", "future_ops",
           "excess_capacity", "swap_grid", "shuttle_grid", "threshold_grid", "parallelism_grid", "future_ops_grid",
           "excess_capacity_grid", "lookahead_layers"});
  std::int64_t points = s.integer("points", 8);
  if (points < 1) throw ConfigError("[sweep] points must be at least 1");
  StagePlan plan = StagePlan::defaults(static_cast<std::size_t>(points));
  auto grid = [&](const char* range_key, const char* grid_key, std::vector<double>& out) {
    if (s.has(range_key) && s.has(grid_key))
      throw ConfigError(std::string("[sweep] give either '") + range_key + "' or '" + grid_key + "'");
    if (s.has(grid_key)) {
      out = s.numbers(grid_key);
    } else if (s.has(range_key)) {
      auto r = s.numbers(range_key);
      if (r.size() != 2) throw ConfigError(std::string("[sweep] ") + range_key + " must be [lo, hi]");
      out = linspace(r[0], r[1], static_cast<std::size_t>(points));
    }
  };
  grid("swap", "swap_grid", plan.swap_grid);
  grid("shuttle", "shuttle_grid", plan.shuttle_grid);
  grid("threshold", "threshold_grid", plan.threshold_grid);
  grid("parallelism", "parallelism_grid", plan.parallelism_grid);
  grid("future_ops", "future_ops_grid", plan.future_ops_grid);
  grid("excess_capacity", "excess_capacity_grid", plan.excess_capacity_grid);
  std::int64_t k = s.integer("retain_k", 10);
  if (k < 1) throw ConfigError("[sweep] retain_k must be at least 1");
  plan.retain_k = static_cast<std::size_t>(k);
  std::int64_t t = s.integer("threads", 0);
  if (t < 0) throw ConfigError("[sweep] threads must be non-negative");
  threads = static_cast<unsigned>(t);
  plan.seed.lookahead_layers = static_cast<int>(s.integer("lookahead_layers", 7));
  try {
    plan.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return plan;
}

PhysicsParams read_physics(const Section& s) {
  s.allow({"t_1q", "t_2q", "t_swap", "t_shuttle", "t_split_merge", "e_1q", "e_2q_base", "heat_per_shuttle",
           "e_heat_coeff", "chain_coeff", "T2"});
  PhysicsParams p;
  p.t_1q = s.number("t_1q", p.t_1q);
  p.t_2q = s.number("t_2q", p.t_2q);
  p.t_swap = s.number("t_swap", p.t_swap);
  p.t_shuttle = s.number("t_shuttle", p.t_shuttle);
  p.t_split_merge = s.number("t_split_merge", p.t_split_merge);
  p.e_1q = s.number("e_1q", p.e_1q);
  p.e_2q_base = s.number("e_2q_base", p.e_2q_base);
  p.heat_per_shuttle = s.number("heat_per_shuttle", p.heat_per_shuttle);
  p.e_heat_coeff = s.number("e_heat_coeff", p.e_heat_coeff);
  p.chain_coeff = s.number("chain_coeff", p.chain_coeff);
  p.T2 = s.number("T2", p.T2);
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return p;
}

}  // namespace

nlohmann::json parse_toml(std::string_view text) {
  json root = json::object();
  json* section = &root;
  std::set<std::string> seen_sections;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": malformed section header");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (!valid_key(name)) throw ConfigError("line " + std::to_string(line_no) + ": invalid section name");
      if (!seen_sections.insert(name).second)
        throw ConfigError("line " + std::to_string(line_no) + ": duplicate section [" + name + "]");
      root[name] = json::object();
      section = &root[name];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (!valid_key(key)) throw ConfigError("line " + std::to_string(line_no) + ": invalid key '" + key + "'");
    if (section->contains(key)) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    (*section)[key] = ValueParser(trim(line.substr(eq + 1)), line_no).parse_all();
  }
  return root;
}

MachineGraph TopologySpec::build() const {
  try {
    switch (kind) {
      case TopologyKind::Linear: return build_linear(traps, capacity);
      case TopologyKind::Ring: return build_ring(traps, capacity);
      case TopologyKind::Grid: return build_grid(rows, cols, capacity);
      case TopologyKind::Custom: return build_custom(capacities, links);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("topology: ") + e.what());
  }
  throw ConfigError("unknown topology kind");
}

Circuit CircuitSpec::load(std::uint64_t seed) const {
  Circuit c;
  if (file) {
    std::ifstream in(*file);
    if (!in) throw ConfigError("circuit file not found: " + file->string());
    std::stringstream buf;
    buf << in.rdbuf();
    c = parse_circuit(buf.str());
  } else {
    try {
      c = generator == "random" ? generate_random(qubits, layers, repeat_bias, seed)
                                : generate_benchmark(generator, qubits, seed);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("circuit: ") + e.what());
    }
  }
  return relabel ? relabel_qubits(c, seed) : c;
}

RunConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json doc = parse_toml(text);
  RunConfig cfg;
  for (const auto& [k, v] : doc.items()) {
    static const std::set<std::string> top = {"seed", "topology", "circuit", "placement", "weights",
                                              "sweep", "physics", "output"};
    if (!top.count(k)) throw ConfigError("unknown top-level entry '" + k + "'");
    bool is_section = v.is_object();
    bool should_be_section = k != "seed";
    if (is_section != should_be_section)
      throw ConfigError(should_be_section ? "'" + k + "' must be a section" : "'seed' must be a top-level key");
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_integer() || doc["seed"].get<std::int64_t>() < 0)
      throw ConfigError("seed must be a non-negative integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (!doc.contains("topology")) throw ConfigError("missing [topology] section");
  if (!doc.contains("circuit")) throw ConfigError("missing [circuit] section");
  cfg.topology = read_topology(Section(doc["topology"], "topology"));
  cfg.circuit = read_circuit(Section(doc["circuit"], "circuit"), base_dir);

  if (doc.contains("placement")) {
    Section p(doc["placement"], "placement");
    p.allow({"strategy"});
    try {
      cfg.placement = placement_strategy_from_string(p.string("strategy", "sequential"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  bool has_weights = doc.contains("weights");
  bool has_sweep = doc.contains("sweep");
  if (has_weights && has_sweep) throw ConfigError("config must contain exactly one of [weights] and [sweep], not both");
  if (has_weights) cfg.weights = read_weights(Section(doc["weights"], "weights"));
  if (has_sweep) cfg.sweep = read_sweep(Section(doc["sweep"], "sweep"), cfg.threads);
  if (!has_weights && !has_sweep) throw ConfigError("config must contain exactly one of [weights] and [sweep]");

  if (doc.contains("physics")) cfg.physics = read_physics(Section(doc["physics"], "physics"));
  if (doc.contains("output")) {
    Section o(doc["output"], "output");
    o.allow({"dir"});
    std::filesystem::path dir = o.string("dir", "out");
    cfg.out_dir = dir.is_relative() ? base_dir / dir : dir;
  } else {
    cfg.out_dir = base_dir / "out";
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not found: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path());
}

}  // namespace qccd
