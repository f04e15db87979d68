#include <benchmark/benchmark.h>

#include "gtq/casimir.hpp"
#include "gtq/generic.hpp"
#include "gtq/modules.hpp"
#include "gtq/pattern.hpp"
#include "gtq/skew.hpp"

using namespace gtq;

namespace {

Mode mode_arg(const benchmark::State &s) { return s.range(1) ? Mode::quantum : Mode::classical; }

void BM_EnumerateBasis(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  std::vector<HalfInt> top(static_cast<std::size_t>(n / 2), HalfInt(0));
  top[0] = HalfInt(2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(n, top));
}
BENCHMARK(BM_EnumerateBasis)->DenseRange(3, 7);

void BM_QNumberSum(benchmark::State &state) {
  int v = var_index(5, 1);
  for (auto _ : state) {
    std::vector<MultiRat> terms{qnum_shifted(v, 1, Mode::quantum) * qnum_shifted(v, -1, Mode::quantum),
                                -(qnum_shifted(v, 0, Mode::quantum) * qnum_shifted(v, 0, Mode::quantum)),
                                MultiRat::constant(1)};
    benchmark::DoNotOptimize(MultiRat::sum(terms).is_zero());
  }
}
BENCHMARK(BM_QNumberSum);

void BM_BuildRatModule(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  std::vector<HalfInt> top(static_cast<std::size_t>(n / 2), HalfInt(0));
  top[0] = HalfInt(1);
  for (auto _ : state) benchmark::DoNotOptimize(build_rat_module(n, top, mode_arg(state)));
}
BENCHMARK(BM_BuildRatModule)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_GenericRelations(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_generic_relations(n, mode_arg(state)));
}
BENCHMARK(BM_GenericRelations)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Embedding(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_embedding(n, mode_arg(state)));
}
BENCHMARK(BM_Embedding)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Invariance(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_invariance(n, mode_arg(state)));
}
BENCHMARK(BM_Invariance)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
