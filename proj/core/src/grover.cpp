#include "qsat/grover.hpp"

#include <cmath>
#include <fmt/format.h>

#include "qsat/error.hpp"
#include "qsat/mcx.hpp"

namespace qsat {

double GroverPlan::expected_success() const {
  const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
  return s * s;
}

GroverPlan plan_with_iterations(int n_search, std::uint64_t M, std::uint64_t k) {
  if (n_search < 1 || n_search > 62) throw InputError(fmt::format("search register of {} qubits", n_search));
  GroverPlan p;
  p.n_search = n_search;
  p.N = std::uint64_t{1} << n_search;
  if (M == 0) throw UnsatError("formula is unsatisfiable; Grover search is undefined");
  if (M > p.N) throw InputError(fmt::format("model count {} exceeds the search space {}", M, p.N));
  p.M = M;
  p.theta = std::asin(std::sqrt(static_cast<double>(M) / static_cast<double>(p.N)));
  p.k = k;
  p.over_half = 2 * M > p.N;
  return p;
}

GroverPlan plan_iterations(int n_search, std::uint64_t M) {
  auto p = plan_with_iterations(n_search, M, 0);
  const double ratio = static_cast<double>(p.N) / static_cast<double>(p.M);
  p.k = static_cast<std::uint64_t>(std::floor(M_PI / 4.0 * std::sqrt(ratio)));
  return p;
}

std::vector<Gate> diffusion(std::span<const Qubit> search) {
  if (search.empty()) throw InputError("diffusion needs at least one qubit");
  std::vector<Gate> out;
  if (search.size() == 1) {
    const Qubit q = search.front();
    out.push_back(Gate::h(q));
    for (int i = 0; i < 4; ++i) out.push_back(Gate::t(q));
    out.push_back(Gate::h(q));
    return out;
  }
  for (Qubit q : search) out.push_back(Gate::h(q));
  for (Qubit q : search) out.push_back(Gate::x(q));
  const Qubit last = search.back();
  out.push_back(Gate::h(last));
  out.push_back(controlled_x(std::vector<Qubit>(search.begin(), search.end() - 1), last));
  out.push_back(Gate::h(last));
  for (Qubit q : search) out.push_back(Gate::x(q));
  for (Qubit q : search) out.push_back(Gate::h(q));
  return out;
}

int diffusion_pool(int n_search) { return mcx_ancillas(n_search - 1); }

namespace {

template <typename Formula>
GroverCircuit assemble(const Formula& f, FormulaKind kind, std::optional<std::uint64_t> models,
                       std::optional<std::uint64_t> iterations, int count_cap) {
  const int n = f.num_vars;
  if (n < 1) throw InputError("formula has no variables to search over");
  const std::uint64_t M = models ? *models : count_models(f, count_cap).count;
  GroverCircuit out;
  out.kind = kind;
  out.plan = iterations ? plan_with_iterations(n, M, *iterations) : plan_iterations(n, M);

  if (out.plan.k == 0) {
    out.circuit = Circuit(QubitRegistry(n, 0, 0));
    for (Qubit q : out.circuit.registry().input_qubits()) out.circuit.append(Gate::h(q));
    return out;
  }

  const OracleCircuit oracle = synthesize_oracle(f);
  const auto search = oracle.registry().input_qubits();
  const auto diff = diffusion(search);
  const int pool = std::max(oracle.registry().pool_size(), diffusion_pool(n));
  out.circuit = Circuit(oracle.registry().with_pool(pool));
  for (Qubit q : search) out.circuit.append(Gate::h(q));
  for (std::uint64_t i = 0; i < out.plan.k; ++i) {
    out.circuit.append(std::span<const Gate>(oracle.circuit.gates()));
    out.circuit.append(std::span<const Gate>(diff));
  }
  return out;
}

template <typename Formula>
double success(const StateVector& s, const Formula& f) {
  const std::uint64_t mask = f.num_vars >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.num_vars) - 1;
  return probability_mass(s, [&](std::uint64_t i) { return evaluate_packed(f, i & mask); });
}

}  // namespace

GroverCircuit assemble_grover(const CnfFormula& f, std::optional<std::uint64_t> models,
                              std::optional<std::uint64_t> iterations, int count_cap) {
  return assemble(f, FormulaKind::Cnf, models, iterations, count_cap);
}

GroverCircuit assemble_grover(const EcnfFormula& f, std::optional<std::uint64_t> models,
                              std::optional<std::uint64_t> iterations, int count_cap) {
  return assemble(f, FormulaKind::Ecnf, models, iterations, count_cap);
}

double success_probability(const StateVector& s, const CnfFormula& f) { return success(s, f); }
double success_probability(const StateVector& s, const EcnfFormula& f) { return success(s, f); }

}  // namespace qsat
