#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "qsat/circuit.hpp"

namespace qsat {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultSimulatorCap = 24;

/// Dense state over num_qubits qubits; amplitude i belongs to the basis
/// state whose bit q is qubit q (little-endian).
class StateVector {
 public:
  /// |index>. Throws CapacityError above `cap` qubits.
  static StateVector basis(int num_qubits, std::uint64_t index, int cap = kDefaultSimulatorCap);
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude operator[](std::uint64_t index) const { return amps_[index]; }

  void apply(const Gate& g);
  double norm_squared() const;

 private:
  StateVector(int n, std::vector<Amplitude> amps) : num_qubits_(n), amps_(std::move(amps)) {}
  int num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

StateVector apply_gate(StateVector s, const Gate& g);

/// Applies the gates in order. The circuit and state must agree on width.
StateVector run(const Circuit& c, StateVector initial);
StateVector run(const Circuit& c, std::uint64_t basis_index, int cap = kDefaultSimulatorCap);

/// Sum of |amp|^2 over basis indices accepted by `predicate`.
double probability_mass(const StateVector& s, const std::function<bool(std::uint64_t)>& predicate);

}  // namespace qsat
