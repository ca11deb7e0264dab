#include "pivotal/classes.hpp"
#include "pivotal/decomposition.hpp"
#include "pivotal/diagram.hpp"
#include "pivotal/extensions.hpp"
#include "pivotal/function_table.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace pivotal;

namespace {

FunctionTable random_boolean(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> bits(std::size_t{1} << n);
  for (int& b : bits) b = static_cast<int>(rng() & 1U);
  return FunctionTable::boolean(n, bits);
}

void BM_SynthesizeBoolean(benchmark::State& state) {
  const FunctionTable f = random_boolean(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_pivotal(f));
}
BENCHMARK(BM_SynthesizeBoolean)->DenseRange(2, 8, 2);

void BM_SynthesizeChain(benchmark::State& state) {
  const Sort s = Sort::chain(static_cast<std::size_t>(state.range(0)));
  const FunctionTable f = FunctionTable::tabulate(3, s, s, [](const Point& x) { return std::min({x[0], x[1], x[2]}); });
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_pivotal(f));
}
BENCHMARK(BM_SynthesizeChain)->Arg(3)->Arg(5)->Arg(9);

void BM_MinimalClass(benchmark::State& state) {
  const FunctionTable f = random_boolean(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_um_class(f));
}
BENCHMARK(BM_MinimalClass)->DenseRange(2, 10, 4);

void BM_ClosedForms(benchmark::State& state) {
  const FunctionTable f = random_boolean(4, 3);
  for (auto _ : state) {
    for (int c = 1; c <= um_class_count; ++c) benchmark::DoNotOptimize(um_closed_form(f, c));
  }
}
BENCHMARK(BM_ClosedForms);

void BM_DiagramBuild(benchmark::State& state) {
  const FunctionTable f = random_boolean(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(build(f, Rule::shannon));
}
BENCHMARK(BM_DiagramBuild)->DenseRange(4, 12, 4);

void BM_MleEvaluate(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const MultilinearForm m = sop_form(random_boolean(n, 5));
  const std::vector<Rational> x(n, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(mle_evaluate(m, x));
}
BENCHMARK(BM_MleEvaluate)->DenseRange(2, 8, 3);

void BM_LovaszGrid(benchmark::State& state) {
  const LovaszForm l = mobius(random_boolean(3, 6));
  for (auto _ : state) benchmark::DoNotOptimize(sample_on_grid(l, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LovaszGrid)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
