#pragma once

// Clifford+T lowering of multi-controlled X gates.
//
// A C^2X expands into the standard 15-gate network (2 H, 7 T/Tdg, 6 CX).
// For m >= 3 controls, m-2 clean ancillas hold a ladder of partial products
// built with 9-gate relative-phase Toffolis; the last product and the final
// control drive one full C^2X onto the target, then the ladder is undone.
// That gives 2(m-2) relative-phase blocks plus one C^2X:
//   total 18m-21 = (4m-6) H + (8m-9) T + (6m-6) CX.
// Negative controls are conjugated with X gates tagged GateRole::Polarity.

#include <span>
#include <vector>

#include "qsat/circuit.hpp"

namespace qsat {

struct McxCost {
  int total = 0;
  int h = 0;
  int t = 0;
  int cx = 0;
  int ancilla = 0;
  friend bool operator==(const McxCost&, const McxCost&) = default;
};

/// Closed-form cost of a positive-control C^mX, m >= 2.
McxCost mcx_cost(int m);

/// Ancillas needed to lower an X with `controls` controls.
int mcx_ancillas(int controls);

/// Exact Toffoli, 15 gates.
std::vector<Gate> ccx_clifford_t(Qubit a, Qubit b, Qubit target);

/// Toffoli up to a diagonal phase on (a, b, target), 9 gates. Only valid when
/// it is later undone by its own inverse with a, b unchanged in between.
std::vector<Gate> relative_phase_toffoli(Qubit a, Qubit b, Qubit target);

/// Lowers one X/CX/MCX gate. `pool` must hold at least mcx_ancillas(m) clean
/// qubits disjoint from the gate; they are returned clean. Non-MCX gates pass
/// through unchanged.
std::vector<Gate> decompose_mcx(const Gate& g, std::span<const Qubit> pool);

/// Largest decomposition pool any gate in `gates` needs.
int required_pool(std::span<const Gate> gates);

/// Lowers every MCX using the registry's decomposition pool. Throws
/// CapacityError when the pool is too small.
Circuit lower(const Circuit& c);

}  // namespace qsat
