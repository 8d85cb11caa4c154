#include <benchmark/benchmark.h>

#include "symcap/bounds.hpp"
#include "symcap/configuration.hpp"
#include "symcap/quotient.hpp"
#include "symcap/transport.hpp"

namespace {

using namespace symcap;

const Graph& pentagon() {
  static const Graph g = construct_named(Family::kCycle, 5);
  return g;
}

void BM_FindTransport(benchmark::State& state) {
  const auto k = static_cast<Weight>(state.range(0));
  const auto configs = enumerate_configurations(5, k);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& f = configs[i % configs.size()];
    const auto& g = configs[(i * 7 + 3) % configs.size()];
    benchmark::DoNotOptimize(find_transport(pentagon(), f, g));
    ++i;
  }
}
BENCHMARK(BM_FindTransport)->Arg(4)->Arg(9)->Arg(30);

void BM_RankUnrank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Weight k = 12;
  const Count total = composition_count(n, k);
  std::uint64_t r = 0;
  for (auto _ : state) {
    const Configuration f = unrank(n, k, r);
    benchmark::DoNotOptimize(rank(f));
    r = (r + 7919) % static_cast<std::uint64_t>(total);
  }
}
BENCHMARK(BM_RankUnrank)->Arg(5)->Arg(10);

void BM_BuildQuotient(benchmark::State& state) {
  const auto k = static_cast<Weight>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_quotient(pentagon(), k));
  state.counters["vertices"] = static_cast<double>(composition_count(5, k));
}
BENCHMARK(BM_BuildQuotient)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SolveSymmetricPower(benchmark::State& state) {
  const auto k = static_cast<Weight>(state.range(0));
  const QuotientGraph q = build_quotient(pentagon(), k);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SolveReport r = solve_symmetric_power(q, SolveBudget{});
    nodes = r.nodes_explored;
    benchmark::DoNotOptimize(r.alpha);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SolveSymmetricPower)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
