#pragma once

// Phase-oracle synthesis. Each clause k is computed onto its own ancilla y_k
// (U_F), the phase is kicked back with H . MCX(y_0..y_{m-2} -> y_{m-1}) . H,
// and U_F is undone. With a single clause the kickback is Z = T^4 on y_0.
// For every basis input |x>|0..0> the oracle yields (-1)^F(x) |x>|0..0>.

#include <cstddef>
#include <span>
#include <vector>

#include "qsat/circuit.hpp"
#include "qsat/formula.hpp"

namespace qsat {

enum class FormulaKind { Cnf, Ecnf };

std::string_view to_string(FormulaKind k);

/// X(y); X on uncomplemented literals; MCX(literals -> y); undo the X's.
/// A tautological clause is just X(y).
std::vector<Gate> synthesize_clause_cnf(const Clause& c, const QubitRegistry& reg, Qubit y);

/// Per monomial: the constant 1 is X(y); a literal is CX (followed by X(y)
/// when complemented); a product X-conjugates its complemented literals
/// around MCX(vars -> y).
std::vector<Gate> synthesize_clause_ecnf(const EsopClause& c, const QubitRegistry& reg, Qubit y);

struct OracleCircuit {
  /// Unlowered: may contain MCX gates. The registry's pool is sized for the
  /// widest of them.
  Circuit circuit;
  FormulaKind kind = FormulaKind::Cnf;
  int num_clauses = 0;
  /// circuit.gates()[0, compute_end) is U_F, [compute_end, phase_end) the
  /// phase block, and the rest is U_F inverted.
  std::size_t compute_end = 0;
  std::size_t phase_end = 0;

  const QubitRegistry& registry() const { return circuit.registry(); }
  std::span<const Gate> compute() const;
  std::span<const Gate> phase() const;
  std::span<const Gate> uncompute() const;
};

OracleCircuit synthesize_oracle(const CnfFormula& f);
OracleCircuit synthesize_oracle(const EcnfFormula& f);

/// Clifford+T form of the oracle.
Circuit lowered(const OracleCircuit& o);

}  // namespace qsat
