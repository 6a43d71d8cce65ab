#pragma once

// Resource figures for lowered circuits, the closed-form cost model for
// equivalence propositions and the phi family, and CNF vs e-CNF comparison
// rows in the #q/#CX/#T/#D schema.

#include <cstdint>
#include <string>
#include <vector>

#include "qsat/circuit.hpp"
#include "qsat/formula.hpp"
#include "qsat/oracle.hpp"

namespace qsat {

struct ResourceEstimate {
  AccountingMode mode = AccountingMode::Physical;
  std::int64_t inputs = 0;
  /// inputs + clause ancillas + decomposition pool; the phase kickback
  /// reuses the last clause ancilla.
  std::int64_t qubits = 0;
  /// qubits + 1, the count under a dedicated phase-qubit convention.
  std::int64_t qubits_dedicated_phase = 0;
  std::int64_t cx = 0;
  std::int64_t t = 0;
  std::int64_t h = 0;
  std::int64_t x = 0;
  std::int64_t total_cliffordT = 0;
  std::int64_t depth = 0;
  std::int64_t clause_ancillas = 0;
  std::int64_t decomp_ancillas_pool = 0;
  /// Sum of max(0, m-2) over every MCX before lowering.
  std::int64_t decomp_ancillas_cumulative = 0;
  /// H gates around the phase MCX; part of h and total_cliffordT.
  std::int64_t kickback_h = 0;

  friend bool operator==(const ResourceEstimate&, const ResourceEstimate&) = default;
};

/// Counts on a Clifford+T circuit. Throws CircuitError if an MCX remains.
/// decomp_ancillas_cumulative is left 0; measure_oracle() fills it.
ResourceEstimate measure(const Circuit& lowered, AccountingMode mode);

/// Lowers the oracle and measures it.
ResourceEstimate measure_oracle(const OracleCircuit& oracle, AccountingMode mode);

enum class EquivalenceOp { And, Or, Xor };

std::string_view to_string(EquivalenceOp op);

struct EstimatorCost {
  std::int64_t gates = 0;
  std::int64_t ancillas = 0;
  friend bool operator==(const EstimatorCost&, const EstimatorCost&) = default;
};

/// Cost of one proposition p <-> (a op b) under the closed-form model.
EstimatorCost closed_form_equivalence_cost(EquivalenceOp op, FormulaKind encoding);

/// Closed-form Clifford+T total for the phi family: e-CNF 88m-61, grouped
/// CNF 252m-61. Throws InputError for m < 2.
std::int64_t closed_form_phi_family(int m, FormulaKind encoding);
std::int64_t closed_form_phi_reduction(int m);

/// 100 (cnf - ecnf) / cnf in hundredths of a percent, rounded half to
/// even. Zero when cnf is zero.
std::int64_t improvement_hundredths(std::int64_t cnf, std::int64_t ecnf);
std::string format_hundredths(std::int64_t v);

struct ComparisonRow {
  std::string name;
  ResourceEstimate cnf;
  ResourceEstimate ecnf;
  std::int64_t improv_q = 0;
  std::int64_t improv_cx = 0;
  std::int64_t improv_t = 0;
  std::int64_t improv_depth = 0;
  /// Which CNF construction the cnf side reflects.
  std::string cnf_construction = "flat";
};

ComparisonRow compare_estimates(std::string name, const ResourceEstimate& cnf, const ResourceEstimate& ecnf);

/// Synthesizes, lowers and measures both sides. When both formulas are
/// small enough to enumerate, throws InputError unless they are
/// equisatisfiable.
ComparisonRow compare(std::string name, const CnfFormula& f_cnf, const EcnfFormula& f_ecnf, AccountingMode mode);

std::string to_csv(const std::vector<ComparisonRow>& rows);
std::string to_json(const std::vector<ComparisonRow>& rows);

}  // namespace qsat
