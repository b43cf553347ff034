#include <benchmark/benchmark.h>

#include "hetperc/bounds.hpp"
#include "hetperc/clusters.hpp"
#include "hetperc/generators.hpp"
#include "hetperc/matrices.hpp"
#include "hetperc/montecarlo.hpp"
#include "hetperc/sac.hpp"
#include "hetperc/spectral.hpp"

namespace {

using namespace hetperc;

void BM_LargestOutCluster(benchmark::State& state) {
  const auto L = static_cast<std::uint32_t>(state.range(0));
  const Digraph d = two_region(L, 3, 2, 1);
  const OpenMask open = sample_open(SiteProbabilities::homogeneous(d.vertex_count(), 0.4), 1, 0);
  ClusterEngine engine(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.compute(open, {}, ClusterMode::out).largest);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(d.vertex_count()));
}
BENCHMARK(BM_LargestOutCluster)->Arg(20)->Arg(75)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_StrongClusters(benchmark::State& state) {
  const auto L = static_cast<std::uint32_t>(state.range(0));
  const Digraph d = two_region(L, 3, 2, 1);
  const OpenMask open = sample_open(SiteProbabilities::homogeneous(d.vertex_count(), 0.55), 1, 0);
  ClusterEngine engine(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.compute(open, {}, ClusterMode::str).largest);
  }
}
BENCHMARK(BM_StrongClusters)->Arg(75)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_HashimotoSpectralRadius(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Digraph d = random_regular(n, 3, 7);
  const SparseNonNegMatrix h =
      weighted_hashimoto(d, SiteProbabilities::homogeneous(d.vertex_count(), 0.3));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(h).rho);
}
BENCHMARK(BM_HashimotoSpectralRadius)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SacCount(benchmark::State& state) {
  const Digraph d = torus({6, 6});
  const OpenMask open(d.vertex_count(), 1);
  const auto cap = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_sacs(d, open, 0, cap).total);
}
BENCHMARK(BM_SacCount)->Arg(6)->Arg(8)->Arg(10);

void BM_Analyze(benchmark::State& state) {
  const Digraph d = torus({8, 8});
  const SiteProbabilities p = SiteProbabilities::homogeneous(d.vertex_count(), 0.2);
  const auto pairs = default_pairs(d);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(d, p, pairs).records.size());
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
