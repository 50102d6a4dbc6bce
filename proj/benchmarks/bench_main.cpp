#include <benchmark/benchmark.h>

#include "rpphilb/components.hpp"
#include "rpphilb/equations.hpp"
#include "rpphilb/io.hpp"
#include "rpphilb/pointcount.hpp"
#include "rpphilb/series.hpp"

using namespace rpphilb;

namespace {

const char* const kSample = "0 0 3 / 0 2 5 / 3 5 5";

void BM_Indicators(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const YoungDiagram d(std::vector<int>(static_cast<std::size_t>(side), side));
  for (auto _ : state) benchmark::DoNotOptimize(indicators(d));
}
BENCHMARK(BM_Indicators)->DenseRange(2, 5);

void BM_Factorizations(benchmark::State& state) {
  const Rpp n = parse_rpp(kSample);
  for (auto _ : state) benchmark::DoNotOptimize(all_factorizations(n));
}
BENCHMARK(BM_Factorizations);

void BM_Classify(benchmark::State& state) {
  const Rpp n = parse_rpp(kSample);
  for (auto _ : state) benchmark::DoNotOptimize(classify(n));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

void BM_TypeIIdeal(benchmark::State& state) {
  const Rpp n = parse_rpp(kSample);
  for (auto _ : state) benchmark::DoNotOptimize(type_i_ideal(n));
}
BENCHMARK(BM_TypeIIdeal)->Unit(benchmark::kMillisecond);

void BM_TangentEmbedding(benchmark::State& state) {
  const Rpp n = parse_rpp(kSample);
  const IdealPresentation ideal = state.range(0) ? type_ii_ideal(n) : type_i_ideal(n);
  for (auto _ : state) benchmark::DoNotOptimize(tangent_embedding(ideal));
}
BENCHMARK(BM_TangentEmbedding)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HookProduct(benchmark::State& state) {
  const YoungDiagram d({3, 2, 1});
  const Value size = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(hook_product(d, size));
}
BENCHMARK(BM_HookProduct)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_RppSeriesBruteforce(benchmark::State& state) {
  const YoungDiagram d({3, 2, 1});
  const Value size = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rpp_series_bruteforce(d, size));
}
BENCHMARK(BM_RppSeriesBruteforce)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_MotivicSeries(benchmark::State& state) {
  const YoungDiagram d({2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(motivic_series(d, Curve::P1, state.range(0)));
}
BENCHMARK(BM_MotivicSeries)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_CountPoints(benchmark::State& state) {
  const Rpp n = parse_rpp("1 2 / 2 3");
  const PrimeField f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(n, f));
}
BENCHMARK(BM_CountPoints)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
