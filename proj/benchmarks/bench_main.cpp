#include <benchmark/benchmark.h>

#include <random>

#include "pingpong/certify.hpp"
#include "pingpong/words.hpp"

using namespace pingpong;

static void BM_VerifyCase(benchmark::State& state) {
  const CaseSpec& c = builtin_catalog()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(c.id);
  for (auto _ : state) benchmark::DoNotOptimize(verify_case(c));
}
BENCHMARK(BM_VerifyCase)->DenseRange(0, 14)->Unit(benchmark::kMillisecond);

static void BM_MatInverse(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Mat m(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Rat(BigInt(static_cast<long>(rng() % 19) - 9), BigInt(1 + static_cast<long>(rng() % 5)));
  for (auto _ : state) benchmark::DoNotOptimize(m.inverse());
}
BENCHMARK(BM_MatInverse);

static void BM_Charpoly(benchmark::State& state) {
  const Mat r = build_generators(16, 8).R;
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(r));
}
BENCHMARK(BM_Charpoly);

static void BM_SampleWords(benchmark::State& state) {
  const CaseSpec& c = builtin_catalog()[0];
  const ReducedFormSpec spec = reduced_form_for(Splitting::free_times_finite(5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_nontriviality(c, spec, static_cast<std::size_t>(state.range(0)), 20, 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleWords)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
