// Serial against parallel kernels on surface point clouds.

#include <benchmark/benchmark.h>

#include "ein3/constructions.hpp"
#include "ein3/kernels.hpp"

using namespace ein;

namespace {

struct Clouds {
  std::vector<EinPoint> a, b;
  CrookedSurface s2;
};

const Clouds& clouds(int n) {
  static std::vector<std::pair<int, Clouds>> cache;
  for (const auto& [k, c] : cache)
    if (k == n) return c;
  auto [s1, s2] = pull_apart(reference_pair_spec());
  cache.push_back({n, {surface_cover(s1, M_PI / n).points, surface_cover(s2, M_PI / n).points, s2}});
  return cache.back().second;
}

template <double (*F)(const std::vector<EinPoint>&, const std::vector<EinPoint>&)>
void BM_cloud_min(benchmark::State& st) {
  const Clouds& c = clouds(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(F(c.a, c.b));
  st.counters["points"] = static_cast<double>(c.a.size() + c.b.size());
}

template <std::vector<int> (*F)(const std::vector<EinPoint>&, const CrookedSurface&, double)>
void BM_side_labels(benchmark::State& st) {
  const Clouds& c = clouds(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(F(c.a, c.s2, 1e-9));
}

template <double (*F)(const std::vector<EinPoint>&)>
void BM_diameter(benchmark::State& st) {
  const Clouds& c = clouds(static_cast<int>(st.range(0)));
  std::vector<EinPoint> pts(c.a.begin(), c.a.begin() + std::min<std::size_t>(c.a.size(), 3000));
  for (auto _ : st) benchmark::DoNotOptimize(F(pts));
}

}  // namespace

BENCHMARK(BM_cloud_min<serial::cloud_min_distance>)->Name("cloud_min/serial")->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cloud_min<parallel::cloud_min_distance>)->Name("cloud_min/parallel")->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_side_labels<serial::side_labels>)->Name("side_labels/serial")->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_side_labels<parallel::side_labels>)->Name("side_labels/parallel")->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_diameter<serial::max_pairwise_distance>)->Name("diameter/serial")->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_diameter<parallel::max_pairwise_distance>)->Name("diameter/parallel")->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
