#pragma once

// Reversible-circuit IR: an ordered gate list over a qubit registry laid out
// as [formula inputs | clause ancillas | decomposition pool | phase qubit].
// Qubit 0 is the least significant bit of a basis-state index.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qsat {

using Qubit = std::uint32_t;

enum class GateKind { X, H, T, Tdg, CX, MCX };

/// What a gate is there for. Polarity gates are the X pairs that conjugate
/// complemented literals or negative controls; paper accounting does not
/// charge for them. Kickback marks the two H gates around the phase MCX.
enum class GateRole : std::uint8_t { Logic, Polarity, Kickback };

enum class AccountingMode { Physical, Paper };

std::string_view to_string(GateKind k);
std::string_view to_string(AccountingMode m);

struct Control {
  Qubit qubit;
  bool positive = true;
  friend bool operator==(const Control&, const Control&) = default;
};

class Gate {
 public:
  static Gate x(Qubit q);
  static Gate h(Qubit q);
  static Gate t(Qubit q);
  static Gate tdg(Qubit q);
  static Gate cx(Qubit control, Qubit target);
  /// Needs at least two controls; use controlled_x() to pick X/CX/MCX by arity.
  static Gate mcx(std::vector<Control> controls, Qubit target);

  GateKind kind() const { return kind_; }
  Qubit target() const { return target_; }
  const std::vector<Control>& controls() const { return controls_; }
  GateRole role() const { return role_; }
  Gate with_role(GateRole r) const;

  /// Controls followed by the target.
  std::vector<Qubit> qubits() const;
  bool is_self_inverse() const { return kind_ != GateKind::T && kind_ != GateKind::Tdg; }
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::vector<Control> controls, Qubit target)
      : kind_(kind), controls_(std::move(controls)), target_(target) {}

  GateKind kind_;
  std::vector<Control> controls_;
  Qubit target_;
  GateRole role_ = GateRole::Logic;
};

/// Positive-control X with 0, 1 or many controls as X, CX or MCX.
Gate controlled_x(std::vector<Qubit> controls, Qubit target);

class QubitRegistry {
 public:
  QubitRegistry() = default;
  QubitRegistry(int inputs, int clause_ancillas, int pool, bool phase_qubit = false);

  int inputs() const { return inputs_; }
  int clause_ancillas() const { return clause_ancillas_; }
  int pool_size() const { return pool_; }
  bool has_phase_qubit() const { return phase_qubit_; }
  int total() const { return inputs_ + clause_ancillas_ + pool_ + (phase_qubit_ ? 1 : 0); }

  /// Qubit holding formula variable `var` (1-based).
  Qubit input(int var) const;
  Qubit clause_ancilla(int k) const;
  Qubit pool_qubit(int i) const;
  Qubit phase_qubit() const;
  std::vector<Qubit> input_qubits() const;
  std::vector<Qubit> clause_qubits() const;
  std::vector<Qubit> pool_qubits() const;

  QubitRegistry with_pool(int pool) const { return QubitRegistry(inputs_, clause_ancillas_, pool, phase_qubit_); }

  friend bool operator==(const QubitRegistry&, const QubitRegistry&) = default;

 private:
  int inputs_ = 0;
  int clause_ancillas_ = 0;
  int pool_ = 0;
  bool phase_qubit_ = false;
};

struct GateCounts {
  std::int64_t x = 0;
  std::int64_t h = 0;
  /// T and T-dagger pooled.
  std::int64_t t = 0;
  std::int64_t cx = 0;
  /// Remaining MCX gates keyed by control count.
  std::map<int, std::int64_t> mcx;

  std::int64_t mcx_total() const;
  /// Clifford+T gate total (x + h + t + cx); MCX gates are not included.
  std::int64_t clifford_t() const { return x + h + t + cx; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(QubitRegistry registry) : registry_(registry) {}

  const QubitRegistry& registry() const { return registry_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  int num_qubits() const { return registry_.total(); }

  /// Throws CircuitError if a qubit is out of range or used twice.
  Circuit& append(Gate g);
  Circuit& append(std::span<const Gate> gates);
  Circuit& append(const Circuit& other);

  bool has_mcx() const;

  /// Same gates and registry, but over a larger decomposition pool.
  Circuit with_registry(QubitRegistry registry) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  QubitRegistry registry_;
  std::vector<Gate> gates_;
};

/// Reversed gate order with T and Tdg exchanged.
Circuit invert(const Circuit& c);
std::vector<Gate> invert(std::span<const Gate> gates);

/// ASAP layering; gates conflict iff they share a qubit. Paper mode skips
/// polarity gates.
int depth(const Circuit& c, AccountingMode mode = AccountingMode::Physical);
int depth(std::span<const Gate> gates, int num_qubits, AccountingMode mode = AccountingMode::Physical);

GateCounts count_gates(const Circuit& c, AccountingMode mode = AccountingMode::Physical);
GateCounts count_gates(std::span<const Gate> gates, AccountingMode mode = AccountingMode::Physical);

}  // namespace qsat
