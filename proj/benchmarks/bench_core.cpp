#include <benchmark/benchmark.h>

#include "cpsdlab/bell.hpp"
#include "cpsdlab/clifford.hpp"
#include "cpsdlab/cpsdrank.hpp"
#include "cpsdlab/lorentz.hpp"
#include "cpsdlab/quantum.hpp"
#include "cpsdlab/separations.hpp"

using namespace cpsdlab;

static void BM_CliffordBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(clifford_basis(n));
  state.counters["d"] = static_cast<double>(clifford_dimension(n));
}
BENCHMARK(BM_CliffordBasis)->DenseRange(4, 16, 4);

static void BM_ExpFamilyFactorization(benchmark::State& state) {
  const ExpFamily fam = exponential_family(static_cast<int>(state.range(0)));
  const GramLorentzFactorization gl = behavior_gl_vectors(fam.vectors);
  for (auto _ : state) benchmark::DoNotOptimize(gl_to_cpsd(gl));
}
BENCHMARK(BM_ExpFamilyFactorization)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_VerifyExpFamily(benchmark::State& state) {
  const ExpFamily fam = exponential_family(static_cast<int>(state.range(0)));
  const CpsdFactorization f = gl_to_cpsd(behavior_gl_vectors(fam.vectors));
  for (auto _ : state) benchmark::DoNotOptimize(verify_factorization(fam.behavior, f));
}
BENCHMARK(BM_VerifyExpFamily)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_SimulateBehavior(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const RealMatrix c = elliptope_extreme_construct(r * (r + 1) / 2, r);
  const auto u = gram_vectors(c);
  const QuantumRepresentation rep = representation_from_vectors(u, u);
  const auto path = state.range(1) ? SimulationPath::ExplicitState : SimulationPath::TraceIdentity;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_behavior(rep, path));
}
BENCHMARK(BM_SimulateBehavior)->ArgsProduct({{2, 4, 6}, {0, 1}})->Unit(benchmark::kMicrosecond);

static void BM_CpsdGraphCycle(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_cpsd_graph(g));
}
BENCHMARK(BM_CpsdGraphCycle)->Arg(5)->Arg(11)->Arg(23);

static void BM_CpsdGraphComplete(benchmark::State& state) {
  const Graph g = Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_cpsd_graph(g));
}
BENCHMARK(BM_CpsdGraphComplete)->Arg(4)->Arg(8)->Arg(24);

// Worst case for the sign search: no pattern works, so all 2^k are tried.
static void BM_HadamardSearchNoRoot(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RealMatrix x = RealMatrix::Constant(n, n, 0.9);
  x.diagonal().setOnes();
  x(0, n - 1) = x(n - 1, 0) = 0.01;
  for (auto _ : state) benchmark::DoNotOptimize(hadamard_sqrt_psd(x));
  state.counters["patterns"] = static_cast<double>(1ULL << (n * (n - 1) / 2));
}
BENCHMARK(BM_HadamardSearchNoRoot)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ScaledBound(benchmark::State& state) {
  const RealMatrix x = odd_cycle_dnn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scaled_analytic_bound(x));
}
BENCHMARK(BM_ScaledBound)->Arg(2)->Arg(6)->Arg(12);
BENCHMARK_MAIN();
