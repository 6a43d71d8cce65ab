#include "qsat/qasm.hpp"

#include <charconv>
#include <fmt/format.h>
#include <vector>

#include "qsat/error.hpp"

namespace qsat {

std::string emit_qasm(const Circuit& c, const QasmOptions& options) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += fmt::format("qreg q[{}];\n", c.num_qubits());
  for (const auto& g : c.gates()) {
    switch (g.kind()) {
      case GateKind::X:
      case GateKind::H:
      case GateKind::T:
      case GateKind::Tdg:
        out += fmt::format("{} q[{}];\n", to_string(g.kind()), g.target());
        break;
      case GateKind::CX:
        out += fmt::format("cx q[{}],q[{}];\n", g.controls().front().qubit, g.target());
        break;
      case GateKind::MCX: {
        if (!options.allow_mcx) {
          throw CircuitError("circuit still contains MCX gates; lower it before emitting OpenQASM");
        }
        std::string controls;
        for (const auto& ctl : g.controls()) {
          controls += fmt::format("{}q[{}] ", ctl.positive ? "" : "!", ctl.qubit);
        }
        out += fmt::format("// mcx {}-> q[{}]\n", controls, g.target());
        break;
      }
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Parses "q[<n>]".
int register_index(std::string_view operand, std::size_t line) {
  operand = trim(operand);
  if (operand.size() < 4 || operand.substr(0, 2) != "q[" || operand.back() != ']') {
    throw ParseError(fmt::format("line {}: bad operand '{}'", line, operand), line);
  }
  const auto digits = operand.substr(2, operand.size() - 3);
  int value = -1;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || value < 0) {
    throw ParseError(fmt::format("line {}: bad register index '{}'", line, digits), line);
  }
  return value;
}

}  // namespace

QasmSummary check_qasm(std::string_view text) {
  QasmSummary summary;
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.size() < 3 || trim(lines[0]) != "OPENQASM 2.0;" || trim(lines[1]) != "include \"qelib1.inc\";") {
    throw ParseError("missing OpenQASM 2.0 header", 1);
  }
  const auto reg = trim(lines[2]);
  if (reg.substr(0, 5) != "qreg " || reg.back() != ';') throw ParseError("line 3: expected qreg", 3);
  summary.register_size = register_index(reg.substr(5, reg.size() - 6), 3);

  for (std::size_t i = 3; i < lines.size(); ++i) {
    const std::size_t n = i + 1;
    auto line = trim(lines[i]);
    if (line.empty() || line.substr(0, 2) == "//") continue;
    if (line.back() != ';') throw ParseError(fmt::format("line {}: missing ';'", n), n);
    line.remove_suffix(1);
    const auto space = line.find(' ');
    if (space == std::string_view::npos) throw ParseError(fmt::format("line {}: missing operands", n), n);
    const std::string name(line.substr(0, space));
    const auto operands = line.substr(space + 1);

    std::vector<int> qs;
    std::size_t start = 0;
    while (true) {
      const auto comma = operands.find(',', start);
      qs.push_back(register_index(operands.substr(start, comma - start), n));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const std::size_t expected = name == "cx" ? 2 : 1;
    if (name != "x" && name != "h" && name != "t" && name != "tdg" && name != "cx") {
      throw ParseError(fmt::format("line {}: gate '{}' outside the Clifford+T set", n, name), n);
    }
    if (qs.size() != expected) throw ParseError(fmt::format("line {}: '{}' takes {} operands", n, name, expected), n);
    for (int q : qs) {
      if (q >= summary.register_size) {
        throw ParseError(fmt::format("line {}: q[{}] outside q[{}]", n, q, summary.register_size), n);
      }
    }
    if (qs.size() == 2 && qs[0] == qs[1]) throw ParseError(fmt::format("line {}: cx on one qubit", n), n);
    ++summary.gate_count;
    ++summary.gates_by_name[name];
  }
  return summary;
}

}  // namespace qsat
