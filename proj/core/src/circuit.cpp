#include "qsat/circuit.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "qsat/error.hpp"

namespace qsat {

std::string_view to_string(GateKind k) {
  switch (k) {
    case GateKind::X:
      return "x";
    case GateKind::H:
      return "h";
    case GateKind::T:
      return "t";
    case GateKind::Tdg:
      return "tdg";
    case GateKind::CX:
      return "cx";
    case GateKind::MCX:
      return "mcx";
  }
  return "?";
}

std::string_view to_string(AccountingMode m) {
  return m == AccountingMode::Paper ? "paper" : "physical";
}

// Gate -----------------------------------------------------------------------

Gate Gate::x(Qubit q) { return Gate(GateKind::X, {}, q); }
Gate Gate::h(Qubit q) { return Gate(GateKind::H, {}, q); }
Gate Gate::t(Qubit q) { return Gate(GateKind::T, {}, q); }
Gate Gate::tdg(Qubit q) { return Gate(GateKind::Tdg, {}, q); }

Gate Gate::cx(Qubit control, Qubit target) {
  if (control == target) throw CircuitError(fmt::format("cx control and target are both q{}", target));
  return Gate(GateKind::CX, {Control{control, true}}, target);
}

Gate Gate::mcx(std::vector<Control> controls, Qubit target) {
  if (controls.size() < 2) {
    throw CircuitError(fmt::format("mcx needs at least 2 controls, got {}", controls.size()));
  }
  for (std::size_t i = 0; i < controls.size(); ++i) {
    if (controls[i].qubit == target) {
      throw CircuitError(fmt::format("mcx control q{} is also the target", target));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (controls[i].qubit == controls[j].qubit) {
        throw CircuitError(fmt::format("mcx control q{} repeated", controls[i].qubit));
      }
    }
  }
  return Gate(GateKind::MCX, std::move(controls), target);
}

Gate Gate::with_role(GateRole r) const {
  Gate g = *this;
  g.role_ = r;
  return g;
}

std::vector<Qubit> Gate::qubits() const {
  std::vector<Qubit> out;
  out.reserve(controls_.size() + 1);
  for (const auto& c : controls_) out.push_back(c.qubit);
  out.push_back(target_);
  return out;
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind_ == GateKind::T) g.kind_ = GateKind::Tdg;
  if (kind_ == GateKind::Tdg) g.kind_ = GateKind::T;
  return g;
}

Gate controlled_x(std::vector<Qubit> controls, Qubit target) {
  if (controls.empty()) return Gate::x(target);
  if (controls.size() == 1) return Gate::cx(controls.front(), target);
  std::vector<Control> cs;
  cs.reserve(controls.size());
  for (Qubit q : controls) cs.push_back(Control{q, true});
  return Gate::mcx(std::move(cs), target);
}

// Registry -------------------------------------------------------------------

QubitRegistry::QubitRegistry(int inputs, int clause_ancillas, int pool, bool phase_qubit)
    : inputs_(inputs), clause_ancillas_(clause_ancillas), pool_(pool), phase_qubit_(phase_qubit) {
  if (inputs < 0 || clause_ancillas < 0 || pool < 0) {
    throw CircuitError("register sizes must be non-negative");
  }
}

Qubit QubitRegistry::input(int var) const {
  if (var < 1 || var > inputs_) throw CircuitError(fmt::format("no input qubit for variable {}", var));
  return static_cast<Qubit>(var - 1);
}

Qubit QubitRegistry::clause_ancilla(int k) const {
  if (k < 0 || k >= clause_ancillas_) throw CircuitError(fmt::format("no clause ancilla y{}", k));
  return static_cast<Qubit>(inputs_ + k);
}

Qubit QubitRegistry::pool_qubit(int i) const {
  if (i < 0 || i >= pool_) throw CircuitError(fmt::format("no decomposition ancilla {}", i));
  return static_cast<Qubit>(inputs_ + clause_ancillas_ + i);
}

Qubit QubitRegistry::phase_qubit() const {
  if (!phase_qubit_) throw CircuitError("registry has no dedicated phase qubit");
  return static_cast<Qubit>(inputs_ + clause_ancillas_ + pool_);
}

namespace {
std::vector<Qubit> range(int first, int count) {
  std::vector<Qubit> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = static_cast<Qubit>(first + i);
  return out;
}
}  // namespace

std::vector<Qubit> QubitRegistry::input_qubits() const { return range(0, inputs_); }
std::vector<Qubit> QubitRegistry::clause_qubits() const { return range(inputs_, clause_ancillas_); }
std::vector<Qubit> QubitRegistry::pool_qubits() const { return range(inputs_ + clause_ancillas_, pool_); }

// Circuit --------------------------------------------------------------------

std::int64_t GateCounts::mcx_total() const {
  std::int64_t n = 0;
  for (const auto& [arity, count] : mcx) n += count;
  return n;
}

Circuit& Circuit::append(Gate g) {
  const auto total = static_cast<Qubit>(registry_.total());
  for (Qubit q : g.qubits()) {
    if (q >= total) {
      throw CircuitError(fmt::format("{} on q{} outside a {}-qubit register", to_string(g.kind()), q, total));
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(std::span<const Gate> gates) {
  for (const auto& g : gates) append(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) { return append(std::span<const Gate>(other.gates())); }

bool Circuit::has_mcx() const {
  return std::any_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind() == GateKind::MCX; });
}

Circuit Circuit::with_registry(QubitRegistry registry) const {
  Circuit out(registry);
  out.append(std::span<const Gate>(gates_));
  return out;
}

std::vector<Gate> invert(std::span<const Gate> gates) {
  std::vector<Gate> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Circuit invert(const Circuit& c) {
  Circuit out(c.registry());
  out.append(std::span<const Gate>(invert(std::span<const Gate>(c.gates()))));
  return out;
}

int depth(std::span<const Gate> gates, int num_qubits, AccountingMode mode) {
  std::vector<int> layer(static_cast<std::size_t>(num_qubits), 0);
  int deepest = 0;
  for (const auto& g : gates) {
    if (mode == AccountingMode::Paper && g.role() == GateRole::Polarity) continue;
    const auto qs = g.qubits();
    int d = 0;
    for (Qubit q : qs) {
      if (q >= layer.size()) layer.resize(q + 1, 0);
      d = std::max(d, layer[q]);
    }
    ++d;
    for (Qubit q : qs) layer[q] = d;
    deepest = std::max(deepest, d);
  }
  return deepest;
}

int depth(const Circuit& c, AccountingMode mode) {
  return depth(std::span<const Gate>(c.gates()), c.num_qubits(), mode);
}

GateCounts count_gates(std::span<const Gate> gates, AccountingMode mode) {
  GateCounts out;
  for (const auto& g : gates) {
    if (mode == AccountingMode::Paper && g.role() == GateRole::Polarity) continue;
    switch (g.kind()) {
      case GateKind::X:
        ++out.x;
        break;
      case GateKind::H:
        ++out.h;
        break;
      case GateKind::T:
      case GateKind::Tdg:
        ++out.t;
        break;
      case GateKind::CX:
        ++out.cx;
        break;
      case GateKind::MCX:
        ++out.mcx[static_cast<int>(g.controls().size())];
        break;
    }
  }
  return out;
}

GateCounts count_gates(const Circuit& c, AccountingMode mode) {
  return count_gates(std::span<const Gate>(c.gates()), mode);
}

}  // namespace qsat
