#include <benchmark/benchmark.h>

#include <qsat/grover.hpp>
#include <qsat/mcx.hpp>
#include <qsat/oracle.hpp>
#include <qsat/resources.hpp>
#include <qsat/statevector.hpp>
#include <qsat/transform.hpp>

using namespace qsat;

namespace {

void BM_DecomposeMcx(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Control> cs;
  std::vector<Qubit> pool;
  for (int i = 0; i < m; ++i) cs.push_back({static_cast<Qubit>(i), i % 2 == 0});
  for (int i = 0; i < mcx_ancillas(m); ++i) pool.push_back(static_cast<Qubit>(m + 1 + i));
  const Gate g = Gate::mcx(cs, static_cast<Qubit>(m));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_mcx(g, pool));
}
BENCHMARK(BM_DecomposeMcx)->Arg(2)->Arg(8)->Arg(32);

void BM_SynthesizePhiFamily(benchmark::State& state) {
  const auto fam = phi_family(static_cast<int>(state.range(0)));
  const bool ecnf = state.range(1) != 0;
  for (auto _ : state) {
    if (ecnf) {
      benchmark::DoNotOptimize(measure_oracle(synthesize_oracle(fam.ecnf), AccountingMode::Paper));
    } else {
      benchmark::DoNotOptimize(measure_oracle(synthesize_oracle(fam.cnf), AccountingMode::Paper));
    }
  }
  state.SetLabel(ecnf ? "ecnf" : "cnf");
}
BENCHMARK(BM_SynthesizePhiFamily)->ArgsProduct({{2, 6, 16}, {0, 1}});

void BM_Tseitin(benchmark::State& state) {
  const auto fam = phi_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tseitin_encode(fam.phi));
}
BENCHMARK(BM_Tseitin)->Arg(4)->Arg(32);

void BM_SimulateGrover(benchmark::State& state) {
  const auto fam = phi_family(static_cast<int>(state.range(0)));
  const Circuit c = lower(assemble_grover(fam.ecnf).circuit);
  for (auto _ : state) benchmark::DoNotOptimize(run(c, 0));
  state.counters["qubits"] = c.num_qubits();
  state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(BM_SimulateGrover)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ApplyHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto s = StateVector::basis(n, 0);
  for (auto _ : state) {
    s.apply(Gate::h(static_cast<Qubit>(n / 2)));
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplyHadamard)->Arg(12)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
