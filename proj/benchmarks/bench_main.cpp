#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "qwass/oracle.hpp"
#include "qwass/qubo.hpp"
#include "qwass/solvers.hpp"

using namespace qwass;

namespace {

std::vector<DiagramPoint> points(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> birth(0.0, 1.0), life(0.05, 1.0);
  std::vector<DiagramPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double b = birth(rng);
    out.push_back({b, b + life(rng)});
  }
  return out;
}

ReducedBipartiteGraph graph(std::size_t n, std::size_t m) {
  std::mt19937_64 rng(n * 131 + m);
  return build_reduced_graph(PersistenceDiagram(points(rng, n)), PersistenceDiagram(points(rng, m)),
                             2.0, Norm(2));
}

void BM_Energy(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const Qubo q = build_qubo(graph(n, n), PenaltyConfig::automatic());
  std::mt19937_64 rng(1);
  BitAssignment x(q.num_vars());
  for (std::size_t i = 0; i < x.size(); ++i) x.set(i, rng() & 1U);
  for (auto _ : state) benchmark::DoNotOptimize(q.energy(x));
}
BENCHMARK(BM_Energy)->Arg(3)->Arg(6)->Arg(12);

void BM_FlipDelta(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  const Qubo q = build_qubo(graph(n, n), PenaltyConfig::automatic());
  BitAssignment x(q.num_vars());
  std::size_t e = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(q.flip_delta(x, e));
    e = (e + 1) % q.num_vars();
  }
}
BENCHMARK(BM_FlipDelta)->Arg(3)->Arg(6)->Arg(12);

void BM_BruteForce(benchmark::State& state) {
  const Qubo q = build_qubo(graph(std::size_t(state.range(0)), std::size_t(state.range(1))),
                            PenaltyConfig::automatic());
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_minimize(q, 1).minimum);
  state.SetLabel("M=" + std::to_string(q.num_vars()));
}
BENCHMARK(BM_BruteForce)
    ->Args({2, 2})
    ->Args({3, 2})
    ->Args({3, 3})
    ->Args({4, 3})
    ->Unit(benchmark::kMillisecond);

void BM_Anneal(benchmark::State& state) {
  const Qubo q = build_qubo(graph(std::size_t(state.range(0)), std::size_t(state.range(0)) - 1),
                            PenaltyConfig::automatic());
  const auto schedule = AnnealSchedule::defaults_for(q);
  for (auto _ : state) benchmark::DoNotOptimize(simulated_anneal(q, schedule, 100, 0, 1));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_Anneal)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Hungarian(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  std::mt19937_64 rng(7);
  const auto x = points(rng, n);
  const auto y = points(rng, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(wasserstein_distance(x, y, 2.0, Norm(2)).power_cost);
}
BENCHMARK(BM_Hungarian)->Arg(6)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
