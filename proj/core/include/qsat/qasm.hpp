#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "qsat/circuit.hpp"

namespace qsat {

struct QasmOptions {
  /// Write remaining MCX gates as `// mcx ...` comments instead of failing.
  bool allow_mcx = false;
};

/// OpenQASM 2.0 with one register q[total] and gates from {x, h, t, tdg, cx}.
std::string emit_qasm(const Circuit& c, const QasmOptions& options = {});

struct QasmSummary {
  int register_size = 0;
  std::size_t gate_count = 0;
  std::map<std::string, std::size_t> gates_by_name;
};

/// Minimal reader for what emit_qasm writes: checks the header, a single
/// qreg, gate names within {x, h, t, tdg, cx} and in-range operands.
QasmSummary check_qasm(std::string_view text);

}  // namespace qsat
