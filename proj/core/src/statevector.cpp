#include "qsat/statevector.hpp"

#include <cmath>
#include <fmt/format.h>

#include "qsat/error.hpp"

namespace qsat {

StateVector StateVector::basis(int num_qubits, std::uint64_t index, int cap) {
  if (num_qubits < 0) throw InputError("qubit count must be non-negative");
  if (num_qubits > cap) {
    throw CapacityError(fmt::format("{} qubits exceed the simulator cap of {}", num_qubits, cap));
  }
  if (num_qubits > 40) throw CapacityError("dense simulation is limited to 40 qubits");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (index >= dim) throw InputError(fmt::format("basis index {} outside a {}-qubit space", index, num_qubits));
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) throw InputError("amplitude count must be a power of two");
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return StateVector(n, std::move(amplitudes));
}

void StateVector::apply(const Gate& g) {
  const auto qubits = g.qubits();
  for (Qubit q : qubits) {
    if (q >= static_cast<Qubit>(num_qubits_)) {
      throw InputError(fmt::format("gate on q{} outside a {}-qubit state", q, num_qubits_));
    }
  }
  const std::uint64_t bit = std::uint64_t{1} << g.target();
  const std::uint64_t dim = amps_.size();

  switch (g.kind()) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MCX: {
      std::uint64_t mask = 0;
      std::uint64_t want = 0;
      for (const auto& c : g.controls()) {
        const std::uint64_t cb = std::uint64_t{1} << c.qubit;
        mask |= cb;
        if (c.positive) want |= cb;
      }
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & bit) == 0 && (i & mask) == want) std::swap(amps_[i], amps_[i | bit]);
      }
      break;
    }
    case GateKind::H: {
      const double r = 1.0 / std::sqrt(2.0);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & bit) != 0) continue;
        const Amplitude a0 = amps_[i];
        const Amplitude a1 = amps_[i | bit];
        amps_[i] = r * (a0 + a1);
        amps_[i | bit] = r * (a0 - a1);
      }
      break;
    }
    case GateKind::T:
    case GateKind::Tdg: {
      const double s = g.kind() == GateKind::T ? 1.0 : -1.0;
      const Amplitude phase = std::polar(1.0, s * M_PI / 4.0);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & bit) != 0) amps_[i] *= phase;
      }
      break;
    }
  }
}

double StateVector::norm_squared() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return acc;
}

StateVector apply_gate(StateVector s, const Gate& g) {
  s.apply(g);
  return s;
}

StateVector run(const Circuit& c, StateVector initial) {
  if (initial.num_qubits() != c.num_qubits()) {
    throw InputError(fmt::format("circuit has {} qubits, state has {}", c.num_qubits(), initial.num_qubits()));
  }
  for (const auto& g : c.gates()) initial.apply(g);
  return initial;
}

StateVector run(const Circuit& c, std::uint64_t basis_index, int cap) {
  return run(c, StateVector::basis(c.num_qubits(), basis_index, cap));
}

double probability_mass(const StateVector& s, const std::function<bool(std::uint64_t)>& predicate) {
  double acc = 0.0;
  const auto& amps = s.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (predicate(i)) acc += std::norm(amps[i]);
  }
  return acc;
}

}  // namespace qsat
