#include "qsat/mcx.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "qsat/error.hpp"

namespace qsat {

McxCost mcx_cost(int m) {
  if (m < 2) throw InputError(fmt::format("closed-form MCX cost needs m >= 2, got {}", m));
  return McxCost{18 * m - 21, 4 * m - 6, 8 * m - 9, 6 * m - 6, std::max(0, m - 2)};
}

int mcx_ancillas(int controls) { return std::max(0, controls - 2); }

std::vector<Gate> ccx_clifford_t(Qubit a, Qubit b, Qubit target) {
  return {
      Gate::h(target),    Gate::cx(b, target), Gate::tdg(target), Gate::cx(a, target), Gate::t(target),
      Gate::cx(b, target), Gate::tdg(target), Gate::cx(a, target), Gate::t(b),         Gate::t(target),
      Gate::h(target),    Gate::cx(a, b),      Gate::t(a),         Gate::tdg(b),       Gate::cx(a, b),
  };
}

std::vector<Gate> relative_phase_toffoli(Qubit a, Qubit b, Qubit target) {
  return {
      Gate::h(target),   Gate::t(target),     Gate::cx(b, target), Gate::tdg(target), Gate::cx(a, target),
      Gate::t(target),   Gate::cx(b, target), Gate::tdg(target),   Gate::h(target),
  };
}

namespace {

void append_with_role(std::vector<Gate>& out, const std::vector<Gate>& gates, GateRole role) {
  for (const auto& g : gates) out.push_back(g.with_role(role));
}

}  // namespace

std::vector<Gate> decompose_mcx(const Gate& g, std::span<const Qubit> pool) {
  if (g.kind() != GateKind::MCX) return {g};
  const auto& controls = g.controls();
  const int m = static_cast<int>(controls.size());
  const int needed = mcx_ancillas(m);
  if (static_cast<int>(pool.size()) < needed) {
    throw CapacityError(fmt::format("C^{}X needs {} decomposition ancillas, pool has {}", m, needed, pool.size()));
  }
  const auto gate_qubits = g.qubits();
  for (int i = 0; i < needed; ++i) {
    if (std::find(gate_qubits.begin(), gate_qubits.end(), pool[i]) != gate_qubits.end()) {
      throw CircuitError(fmt::format("decomposition ancilla q{} overlaps the gate", pool[i]));
    }
  }

  const GateRole role = g.role();
  const GateRole polarity = role == GateRole::Logic || role == GateRole::Kickback ? GateRole::Polarity : role;
  const GateRole body = role == GateRole::Kickback ? GateRole::Logic : role;

  std::vector<Gate> out;
  std::vector<Gate> flips;
  for (const auto& c : controls) {
    if (!c.positive) flips.push_back(Gate::x(c.qubit).with_role(polarity));
  }
  out.insert(out.end(), flips.begin(), flips.end());

  const Qubit target = g.target();
  if (m == 2) {
    append_with_role(out, ccx_clifford_t(controls[0].qubit, controls[1].qubit, target), body);
  } else {
    // ladder[i] holds controls[0] & .. & controls[i + 1].
    std::vector<Gate> compute;
    Qubit previous = controls[0].qubit;
    Qubit next_control = controls[1].qubit;
    for (int i = 0; i < needed; ++i) {
      auto block = relative_phase_toffoli(previous, next_control, pool[i]);
      compute.insert(compute.end(), block.begin(), block.end());
      previous = pool[i];
      next_control = controls[i + 2].qubit;
    }
    append_with_role(out, compute, body);
    append_with_role(out, ccx_clifford_t(previous, controls[m - 1].qubit, target), body);
    append_with_role(out, invert(std::span<const Gate>(compute)), body);
  }

  out.insert(out.end(), flips.begin(), flips.end());
  return out;
}

int required_pool(std::span<const Gate> gates) {
  int pool = 0;
  for (const auto& g : gates) {
    if (g.kind() == GateKind::MCX) pool = std::max(pool, mcx_ancillas(static_cast<int>(g.controls().size())));
  }
  return pool;
}

Circuit lower(const Circuit& c) {
  const auto pool = c.registry().pool_qubits();
  Circuit out(c.registry());
  for (const auto& g : c.gates()) {
    if (g.kind() == GateKind::MCX) {
      out.append(std::span<const Gate>(decompose_mcx(g, pool)));
    } else {
      out.append(g);
    }
  }
  return out;
}

}  // namespace qsat
