#pragma once

// Grover search over every variable of a (transformed) formula: H on the
// search register, then k rounds of oracle followed by diffusion.

#include <cstdint>
#include <optional>
#include <vector>

#include "qsat/circuit.hpp"
#include "qsat/formula.hpp"
#include "qsat/oracle.hpp"
#include "qsat/statevector.hpp"

namespace qsat {

struct GroverPlan {
  int n_search = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  /// asin(sqrt(M/N)).
  double theta = 0.0;
  std::uint64_t k = 0;
  /// M > N/2: amplification cannot help much and k is usually 0.
  bool over_half = false;

  /// sin^2((2k+1) theta).
  double expected_success() const;
};

/// k = floor(pi/4 * sqrt(N/M)). Throws UnsatError for M = 0 and InputError
/// for M > N.
GroverPlan plan_iterations(int n_search, std::uint64_t M);

/// Same plan with the iteration count forced to `k`.
GroverPlan plan_with_iterations(int n_search, std::uint64_t M, std::uint64_t k);

/// 2|psi0><psi0| - I up to a global -1 on `search`. The MCX over the first
/// n-1 qubits stays unlowered; lowering it needs n-3 pool qubits.
std::vector<Gate> diffusion(std::span<const Qubit> search);

/// Pool qubits needed to lower diffusion() over n qubits.
int diffusion_pool(int n_search);

struct GroverCircuit {
  /// Unlowered; the registry pool covers both the oracle and the diffusion.
  Circuit circuit;
  GroverPlan plan;
  FormulaKind kind = FormulaKind::Cnf;
};

/// When `models` is empty the model count is brute-forced within
/// `count_cap` variables. No oracle is built when k = 0.
GroverCircuit assemble_grover(const CnfFormula& f, std::optional<std::uint64_t> models = std::nullopt,
                              std::optional<std::uint64_t> iterations = std::nullopt,
                              int count_cap = kDefaultBruteForceCap);
GroverCircuit assemble_grover(const EcnfFormula& f, std::optional<std::uint64_t> models = std::nullopt,
                              std::optional<std::uint64_t> iterations = std::nullopt,
                              int count_cap = kDefaultBruteForceCap);

/// Probability of measuring a model of `f` on the search register (the low
/// num_vars qubits).
double success_probability(const StateVector& s, const CnfFormula& f);
double success_probability(const StateVector& s, const EcnfFormula& f);

}  // namespace qsat
