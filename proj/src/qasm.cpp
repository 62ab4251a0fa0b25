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
#include <cctype>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "qccd/circuit.hpp"

namespace qccd {
namespace {

struct Statement {
  std::string text;
  std::size_t line = 1;
};

// Splits on ';' after stripping // comments. Each statement carries the line
// on which it starts.
std::vector<Statement> split_statements(std::string_view source, std::string& trailing,
                                        std::size_t& trailing_line) {
  std::vector<Statement> out;
  std::string current;
  std::size_t line = 1;
  std::size_t start_line = 1;
  bool in_comment = false;
  for (std::size_t i = 0; i < source.size(); ++i) {
    char c = source[i];
    if (c == '\n') {
      ++line;
      in_comment = false;
      current.push_back(' ');
      continue;
    }
    if (in_comment) continue;
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      in_comment = true;
      continue;
    }
    if (c == ';') {
      out.push_back({current, start_line});
      current.clear();
      continue;
    }
    if (current.find_first_not_of(" \t\r") == std::string::npos &&
        !std::isspace(static_cast<unsigned char>(c)))
      start_line = line;
    current.push_back(c);
  }
  trailing = current;
  trailing_line = start_line;
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

class AngleParser {
 public:
  AngleParser(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  double parse() {
    double v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "' in angle");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    while (true) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = factor();
    while (true) {
      if (accept('*')) v *= factor();
      else if (accept('/')) v /= factor();
      else return v;
    }
  }

  double factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    if (accept('(')) {
      double v = expr();
      if (!accept(')')) fail("missing ')' in angle");
      return v;
    }
    skip_ws();
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    std::size_t begin = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
            text_[pos_] == 'e' || text_[pos_] == 'E' ||
            ((text_[pos_] == '-' || text_[pos_] == '+') && pos_ > begin &&
             (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
      ++pos_;
    if (begin == pos_) fail("malformed angle '" + std::string(text_) + "'");
    try {
      return std::stod(std::string(text_.substr(begin, pos_ - begin)));
    } catch (const std::exception&) {
      fail("malformed number in angle");
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::optional<GateType> gate_from_name(const std::string& name) {
  if (name == "h") return GateType::H;
  if (name == "x") return GateType::X;
  if (name == "rz") return GateType::RZ;
  if (name == "cx" || name == "CX") return GateType::CX;
  if (name == "cp") return GateType::CP;
  if (name == "cz") return GateType::CZ;
  if (name == "swap") return GateType::SWAP;
  return std::nullopt;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::string trailing;
  std::size_t trailing_line = 0;
  std::vector<Statement> statements = split_statements(text, trailing, trailing_line);
  if (!trim(trailing).empty()) throw ParseError(trailing_line, "missing ';' after '" + trim(trailing) + "'");

  Circuit circuit;
  std::optional<std::string> reg_name;
  bool implicit_register = false;  // no qreg: size grows with the largest index
  bool first = true;
  for (const Statement& st : statements) {
    std::string s = trim(st.text);
    if (s.empty()) continue;
    const std::size_t line = st.line;
    if (s.rfind("OPENQASM", 0) == 0) {
      if (!first) throw ParseError(line, "OPENQASM header must come first");
      if (trim(s.substr(8)) != "2.0") throw ParseError(line, "malformed header: only 'OPENQASM 2.0' is supported");
      first = false;
      continue;
    }
    first = false;
    if (s.rfind("include", 0) == 0) continue;
    if (s.rfind("qreg", 0) == 0) {
      if (reg_name) throw ParseError(line, implicit_register ? "qreg after first gate" : "only one qreg is supported");
      std::string decl = trim(s.substr(4));
      auto lb = decl.find('[');
      auto rb = decl.find(']');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb || !trim(decl.substr(rb + 1)).empty())
        throw ParseError(line, "malformed qreg declaration");
      reg_name = trim(decl.substr(0, lb));
      try {
        long size = std::stol(decl.substr(lb + 1, rb - lb - 1));
        if (size <= 0) throw ParseError(line, "qreg size must be positive");
        circuit.num_qubits = static_cast<std::size_t>(size);
      } catch (const std::logic_error&) {
        throw ParseError(line, "malformed qreg size");
      }
      continue;
    }

    // Gate application: name[(angle)] operand[, operand]
    std::size_t name_end = 0;
    while (name_end < s.size() && (std::isalnum(static_cast<unsigned char>(s[name_end])) || s[name_end] == '_'))
      ++name_end;
    std::string name = s.substr(0, name_end);
    auto type = gate_from_name(name);
    if (!type) throw ParseError(line, "unsupported gate '" + name + "'");
    std::string rest = s.substr(name_end);
    double angle = 0.0;
    std::string trimmed_rest = trim(rest);
    if (!trimmed_rest.empty() && trimmed_rest.front() == '(') {
      auto close = trimmed_rest.rfind(')');
      if (close == std::string::npos) throw ParseError(line, "missing ')' after gate parameter");
      angle = AngleParser(trimmed_rest.substr(1, close - 1), line).parse();
      trimmed_rest = trim(trimmed_rest.substr(close + 1));
      if (!has_angle(*type)) throw ParseError(line, "gate '" + name + "' takes no parameter");
    } else if (has_angle(*type)) {
      throw ParseError(line, "gate '" + name + "' needs an angle parameter");
    }

    std::vector<QubitId> operands;
    std::stringstream ops(trimmed_rest);
    std::string operand;
    while (std::getline(ops, operand, ',')) {
      operand = trim(operand);
      auto lb = operand.find('[');
      auto rb = operand.find(']');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError(line, "malformed operand '" + operand + "'");
      if (!reg_name) {
        reg_name = trim(operand.substr(0, lb));
        implicit_register = true;
      }
      if (trim(operand.substr(0, lb)) != *reg_name)
        throw ParseError(line, "unknown register in '" + operand + "'");
      long idx = 0;
      try {
        idx = std::stol(operand.substr(lb + 1, rb - lb - 1));
      } catch (const std::logic_error&) {
        throw ParseError(line, "malformed qubit index in '" + operand + "'");
      }
      if (implicit_register && idx >= 0)
        circuit.num_qubits = std::max(circuit.num_qubits, static_cast<std::size_t>(idx) + 1);
      if (idx < 0 || static_cast<std::size_t>(idx) >= circuit.num_qubits)
        throw ParseError(line, "qubit index " + std::to_string(idx) + " out of range");
      operands.push_back(QubitId(static_cast<std::size_t>(idx)));
    }
    const std::size_t expected = is_two_qubit(*type) ? 2 : 1;
    if (operands.size() != expected)
      throw ParseError(line, "gate '" + name + "' expects " + std::to_string(expected) + " operand(s)");
    if (expected == 2 && operands[0] == operands[1])
      throw ParseError(line, "gate '" + name + "' operands must differ");
    if (expected == 2) circuit.add(*type, operands[0], operands[1], angle);
    else circuit.add(*type, operands[0], angle);
  }
  return circuit;
}

std::string to_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out.precision(17);
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits << "];\n";
  for (const Gate& g : circuit.gates) {
    out << gate_name(g.type);
    if (has_angle(g.type)) out << '(' << g.angle << ')';
    out << " q[" << g.qubits[0] << ']';
    if (g.two_qubit()) out << ",q[" << g.qubits[1] << ']';
    out << ";\n";
  }
  return out.str();
}

}  // namespace qccd
