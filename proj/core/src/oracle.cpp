#include "qsat/oracle.hpp"

#include <fmt/format.h>

#include "qsat/error.hpp"
#include "qsat/mcx.hpp"

namespace qsat {

std::string_view to_string(FormulaKind k) { return k == FormulaKind::Cnf ? "cnf" : "ecnf"; }

std::span<const Gate> OracleCircuit::compute() const {
  return std::span<const Gate>(circuit.gates()).subspan(0, compute_end);
}

std::span<const Gate> OracleCircuit::phase() const {
  return std::span<const Gate>(circuit.gates()).subspan(compute_end, phase_end - compute_end);
}

std::span<const Gate> OracleCircuit::uncompute() const {
  return std::span<const Gate>(circuit.gates()).subspan(phase_end);
}

std::vector<Gate> synthesize_clause_cnf(const Clause& c, const QubitRegistry& reg, Qubit y) {
  std::vector<Gate> out{Gate::x(y)};
  if (c.is_tautology()) return out;
  std::vector<Gate> flips;
  std::vector<Qubit> controls;
  for (const auto& lit : c.literals()) {
    const Qubit q = reg.input(lit.var);
    controls.push_back(q);
    if (!lit.negated) flips.push_back(Gate::x(q).with_role(GateRole::Polarity));
  }
  out.insert(out.end(), flips.begin(), flips.end());
  out.push_back(controlled_x(std::move(controls), y));
  out.insert(out.end(), flips.begin(), flips.end());
  return out;
}

std::vector<Gate> synthesize_clause_ecnf(const EsopClause& c, const QubitRegistry& reg, Qubit y) {
  std::vector<Gate> out;
  for (const auto& m : c.monomials()) {
    if (m.is_one()) {
      out.push_back(Gate::x(y));
      continue;
    }
    if (m.degree() == 1) {
      const Literal lit = m.literals().front();
      out.push_back(Gate::cx(reg.input(lit.var), y));
      if (lit.negated) out.push_back(Gate::x(y));
      continue;
    }
    std::vector<Gate> flips;
    std::vector<Qubit> controls;
    for (const auto& lit : m.literals()) {
      const Qubit q = reg.input(lit.var);
      controls.push_back(q);
      if (lit.negated) flips.push_back(Gate::x(q).with_role(GateRole::Polarity));
    }
    out.insert(out.end(), flips.begin(), flips.end());
    out.push_back(controlled_x(std::move(controls), y));
    out.insert(out.end(), flips.begin(), flips.end());
  }
  return out;
}

namespace {

template <typename Formula, typename ClauseSynth>
OracleCircuit build(const Formula& f, FormulaKind kind, ClauseSynth synth) {
  const int m = static_cast<int>(f.clauses.size());
  if (m == 0) throw SynthesisError("cannot build an oracle for a formula with no clauses");
  const QubitRegistry logical(f.num_vars, m, 0);

  std::vector<Gate> compute;
  for (int k = 0; k < m; ++k) {
    auto gates = synth(f.clauses[k], logical, logical.clause_ancilla(k));
    compute.insert(compute.end(), gates.begin(), gates.end());
  }

  std::vector<Gate> phase;
  const Qubit y_last = logical.clause_ancilla(m - 1);
  if (m == 1) {
    for (int i = 0; i < 4; ++i) phase.push_back(Gate::t(y_last));
  } else {
    std::vector<Qubit> others;
    for (int k = 0; k + 1 < m; ++k) others.push_back(logical.clause_ancilla(k));
    phase.push_back(Gate::h(y_last).with_role(GateRole::Kickback));
    phase.push_back(controlled_x(std::move(others), y_last));
    phase.push_back(Gate::h(y_last).with_role(GateRole::Kickback));
  }

  const int pool = std::max(required_pool(compute), required_pool(phase));
  OracleCircuit out;
  out.circuit = Circuit(logical.with_pool(pool));
  out.kind = kind;
  out.num_clauses = m;
  out.circuit.append(std::span<const Gate>(compute));
  out.compute_end = out.circuit.size();
  out.circuit.append(std::span<const Gate>(phase));
  out.phase_end = out.circuit.size();
  out.circuit.append(std::span<const Gate>(invert(std::span<const Gate>(compute))));
  return out;
}

}  // namespace

OracleCircuit synthesize_oracle(const CnfFormula& f) {
  return build(f, FormulaKind::Cnf, [](const Clause& c, const QubitRegistry& r, Qubit y) {
    return synthesize_clause_cnf(c, r, y);
  });
}

OracleCircuit synthesize_oracle(const EcnfFormula& f) {
  return build(f, FormulaKind::Ecnf, [](const EsopClause& c, const QubitRegistry& r, Qubit y) {
    return synthesize_clause_ecnf(c, r, y);
  });
}

Circuit lowered(const OracleCircuit& o) { return lower(o.circuit); }

}  // namespace qsat
