#include <benchmark/benchmark.h>

#include <cmath>
#include <map>
#include <numbers>

#include "tlsra/exact.hpp"
#include "tlsra/fast3.hpp"
#include "tlsra/generators.hpp"
#include "tlsra/greedy.hpp"

namespace {

using namespace tlsra;

// Geometric instance with expected max-power degree 1.5 ln n + 6.
const Instance& geometric(std::size_t n) {
  static std::map<std::size_t, Instance> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const double deg = 1.5 * std::log(static_cast<double>(n)) + 6.0;
  GeometricParams p;
  p.n = n;
  p.r_max = std::sqrt(deg / (std::numbers::pi * static_cast<double>(n)));
  p.r_min = 0.3 * p.r_max;
  p.seed = 1;
  p.store_points = false;
  return cache.emplace(n, gen_geometric(p)).first->second;
}

void BM_Fast3Geometric(benchmark::State& state) {
  const auto& inst = geometric(static_cast<std::size_t>(state.range(0)));
  const auto graph = derive_edges(inst);
  std::uint64_t ops = 0;
  for (auto _ : state) {
    auto run = fast3_solve(graph);
    ops = run.op_count;
    benchmark::DoNotOptimize(run.solution.u_set.data());
  }
  state.counters["op_count"] = static_cast<double>(ops);
  state.counters["s_min+s_max"] =
      static_cast<double>(relation_size_min(inst) + relation_size_max(inst));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inst.n));
}
BENCHMARK(BM_Fast3Geometric)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_DeriveEdges(benchmark::State& state) {
  const auto& inst = geometric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto g = derive_edges_unchecked(inst);
    benchmark::DoNotOptimize(g.e_max.data());
  }
}
BENCHMARK(BM_DeriveEdges)->RangeMultiplier(4)->Range(1 << 12, 1 << 18)->Unit(benchmark::kMillisecond);

void BM_GreedyK(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto graph = derive_edges(geometric(256));
  for (auto _ : state) {
    auto sol = approx_2lsra_k(graph, k);
    benchmark::DoNotOptimize(sol.u_set.data());
  }
}
BENCHMARK(BM_GreedyK)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_GreedyWorstCase(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  auto wc = gen_worst_case({3, t});
  const auto graph = derive_edges(wc.instance);
  const auto order = MergingOrder::explicit_schedule(wc.schedule);
  for (auto _ : state) {
    auto sol = approx_2lsra_k(graph, 3, order);
    benchmark::DoNotOptimize(sol.u_set.data());
  }
}
BENCHMARK(BM_GreedyWorstCase)->Arg(5)->Arg(25)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_Exact(benchmark::State& state) {
  GeometricParams p;
  p.n = static_cast<std::size_t>(state.range(0));
  p.r_min = 0.2;
  p.r_max = 0.45;
  p.seed = 3;
  const auto graph = derive_edges(gen_geometric(p));
  for (auto _ : state) {
    auto res = solve_exact(graph);
    benchmark::DoNotOptimize(res.u_opt.data());
    state.counters["size"] = static_cast<double>(res.size);
  }
}
BENCHMARK(BM_Exact)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
