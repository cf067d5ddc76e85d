// Serial reference vs OpenMP kernel for the three data-parallel loops.

#include <benchmark/benchmark.h>

#include "orthogrid/equistats/equistats.hpp"
#include "orthogrid/ortho/ortho.hpp"

using namespace orthogrid;

namespace {

std::vector<Coords> sphere_coords(int d, long D) {
  std::vector<Coords> out;
  for (const auto& v : enumerate_sphere_serial(d, Integer(D))) out.push_back(v.coords());
  return out;
}

void BM_enumerate_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_sphere_serial(4, Integer(st.range(0))));
}
void BM_enumerate_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_sphere(4, Integer(st.range(0))));
}

void BM_identities_serial(benchmark::State& st) {
  const auto vs = sphere_coords(4, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(check_identities_serial(vs, st.range(0)));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * vs.size()));
}
void BM_identities_parallel(benchmark::State& st) {
  const auto vs = sphere_coords(4, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(check_identities(vs, st.range(0)));
  st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * vs.size()));
}

void BM_caps_serial(benchmark::State& st) {
  const auto pts = directions(build_batch(3, Integer(st.range(0)), SampleMode::raw));
  const auto caps = cap_family(3);
  for (auto _ : st) benchmark::DoNotOptimize(cap_discrepancy_serial(pts, caps));
}
void BM_caps_parallel(benchmark::State& st) {
  const auto pts = directions(build_batch(3, Integer(st.range(0)), SampleMode::raw));
  const auto caps = cap_family(3);
  for (auto _ : st) benchmark::DoNotOptimize(cap_discrepancy(pts, caps));
}

}  // namespace

BENCHMARK(BM_enumerate_serial)->Arg(2003)->Arg(10001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_parallel)->Arg(2003)->Arg(10001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identities_serial)->Arg(1001)->Arg(5001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_identities_parallel)->Arg(1001)->Arg(5001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_caps_serial)->Arg(10009)->Arg(100003)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_caps_parallel)->Arg(10009)->Arg(100003)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
