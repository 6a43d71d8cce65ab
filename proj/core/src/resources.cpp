#include "qsat/resources.hpp"

#include <cstdlib>
#include <fmt/format.h>
#include <json.hpp>

#include "qsat/error.hpp"
#include "qsat/mcx.hpp"

namespace qsat {

namespace {

std::int64_t kickback_count(std::span<const Gate> gates) {
  std::int64_t n = 0;
  for (const auto& g : gates) {
    if (g.role() == GateRole::Kickback && g.kind() == GateKind::H) ++n;
  }
  return n;
}

}  // namespace

ResourceEstimate measure(const Circuit& lowered, AccountingMode mode) {
  if (lowered.has_mcx()) throw CircuitError("circuit still contains MCX gates; lower it before measuring");
  const auto counts = count_gates(lowered, mode);
  const auto& reg = lowered.registry();
  ResourceEstimate r;
  r.mode = mode;
  r.inputs = reg.inputs();
  r.qubits = reg.total();
  r.qubits_dedicated_phase = r.qubits + 1;
  r.cx = counts.cx;
  r.t = counts.t;
  r.h = counts.h;
  r.x = counts.x;
  r.total_cliffordT = counts.clifford_t();
  r.depth = depth(lowered, mode);
  r.clause_ancillas = reg.clause_ancillas();
  r.decomp_ancillas_pool = reg.pool_size();
  r.kickback_h = kickback_count(lowered.gates());
  return r;
}

ResourceEstimate measure_oracle(const OracleCircuit& oracle, AccountingMode mode) {
  auto r = measure(lowered(oracle), mode);
  std::int64_t cumulative = 0;
  for (const auto& g : oracle.circuit.gates()) {
    if (g.kind() == GateKind::MCX) cumulative += mcx_ancillas(static_cast<int>(g.controls().size()));
  }
  r.decomp_ancillas_cumulative = cumulative;
  return r;
}

std::string_view to_string(EquivalenceOp op) {
  switch (op) {
    case EquivalenceOp::And: return "and";
    case EquivalenceOp::Or: return "or";
    case EquivalenceOp::Xor: return "xor";
  }
  return "?";
}

EstimatorCost closed_form_equivalence_cost(EquivalenceOp op, FormulaKind encoding) {
  const std::int64_t c2x = mcx_cost(2).total;
  const std::int64_t c3x = mcx_cost(3).total;
  if (encoding == FormulaKind::Ecnf) {
    // AND/OR: one C^2X plus a CX and an X; XOR: three CX and an X.
    if (op == EquivalenceOp::Xor) return {3 + 1, 0};
    return {c2x + 1 + 1, 0};
  }
  if (op == EquivalenceOp::Xor) {
    // Four C^3X clause gates joined by a C^4X charged at 55 gates, which is
    // not mcx_cost(4).total.
    return {4 * c3x + 55, 4 + 4 + 1};
  }
  // Two C^3X, two C^2X and three X gates.
  return {2 * (c3x + c2x) + 3, 3 + 2};
}

std::int64_t closed_form_phi_family(int m, FormulaKind encoding) {
  if (m < 2) throw InputError(fmt::format("phi family needs m >= 2, got {}", m));
  const std::int64_t mm = m;
  const std::int64_t per_side = encoding == FormulaKind::Ecnf ? 35 * mm - 20 : 117 * mm - 20;
  return 2 * per_side + mcx_cost(m).total;
}

std::int64_t closed_form_phi_reduction(int m) {
  return closed_form_phi_family(m, FormulaKind::Cnf) - closed_form_phi_family(m, FormulaKind::Ecnf);
}

std::int64_t improvement_hundredths(std::int64_t cnf, std::int64_t ecnf) {
  if (cnf == 0) return 0;
  const std::int64_t num = 10000 * (cnf - ecnf);
  const bool negative = (num < 0) != (cnf < 0);
  const std::int64_t a = std::llabs(num);
  const std::int64_t b = std::llabs(cnf);
  std::int64_t q = a / b;
  const std::int64_t r = a % b;
  if (2 * r > b || (2 * r == b && (q % 2) == 1)) ++q;
  return negative ? -q : q;
}

std::string format_hundredths(std::int64_t v) {
  const std::int64_t a = std::llabs(v);
  return fmt::format("{}{}.{:02}", v < 0 ? "-" : "", a / 100, a % 100);
}

ComparisonRow compare_estimates(std::string name, const ResourceEstimate& cnf, const ResourceEstimate& ecnf) {
  ComparisonRow row;
  row.name = std::move(name);
  row.cnf = cnf;
  row.ecnf = ecnf;
  row.improv_q = improvement_hundredths(cnf.qubits, ecnf.qubits);
  row.improv_cx = improvement_hundredths(cnf.cx, ecnf.cx);
  row.improv_t = improvement_hundredths(cnf.t, ecnf.t);
  row.improv_depth = improvement_hundredths(cnf.depth, ecnf.depth);
  return row;
}

namespace {

constexpr int kEquisatCheckCap = 20;

}  // namespace

ComparisonRow compare(std::string name, const CnfFormula& f_cnf, const EcnfFormula& f_ecnf, AccountingMode mode) {
  if (f_cnf.num_vars <= kEquisatCheckCap && f_ecnf.num_vars <= kEquisatCheckCap) {
    const bool sat_cnf = count_models(f_cnf).count > 0;
    const bool sat_ecnf = count_models(f_ecnf).count > 0;
    if (sat_cnf != sat_ecnf) {
      throw InputError(fmt::format("{}: CNF and e-CNF sides are not equisatisfiable", name));
    }
  }
  return compare_estimates(std::move(name), measure_oracle(synthesize_oracle(f_cnf), mode),
                           measure_oracle(synthesize_oracle(f_ecnf), mode));
}

std::string to_csv(const std::vector<ComparisonRow>& rows) {
  std::string out =
      "Name,CNF:#q,CNF:#CX,CNF:#T,CNF:#D,eCNF:#q,eCNF:#CX,eCNF:#T,eCNF:#D,"
      "Improv:#q,Improv:#CX,Improv:#T,Improv:#D\n";
  for (const auto& r : rows) {
    std::string name = r.name;
    if (name.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : name) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      name = quoted + "\"";
    }
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", name, r.cnf.qubits, r.cnf.cx, r.cnf.t,
                       r.cnf.depth, r.ecnf.qubits, r.ecnf.cx, r.ecnf.t, r.ecnf.depth, format_hundredths(r.improv_q),
                       format_hundredths(r.improv_cx), format_hundredths(r.improv_t),
                       format_hundredths(r.improv_depth));
  }
  return out;
}

std::string to_json(const std::vector<ComparisonRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["Name"] = r.name;
    j["CNF:#q"] = r.cnf.qubits;
    j["CNF:#CX"] = r.cnf.cx;
    j["CNF:#T"] = r.cnf.t;
    j["CNF:#D"] = r.cnf.depth;
    j["eCNF:#q"] = r.ecnf.qubits;
    j["eCNF:#CX"] = r.ecnf.cx;
    j["eCNF:#T"] = r.ecnf.t;
    j["eCNF:#D"] = r.ecnf.depth;
    // Strings keep the two-decimal rendering exact.
    j["Improv:#q"] = format_hundredths(r.improv_q);
    j["Improv:#CX"] = format_hundredths(r.improv_cx);
    j["Improv:#T"] = format_hundredths(r.improv_t);
    j["Improv:#D"] = format_hundredths(r.improv_depth);
    j["accounting"] = std::string(to_string(r.cnf.mode));
    j["cnf_construction"] = r.cnf_construction;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace qsat
