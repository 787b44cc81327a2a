#include <benchmark/benchmark.h>

#include "tlhat/maps.hpp"
#include "tlhat/markov.hpp"
#include "tlhat/random.hpp"
#include "tlhat/solver.hpp"
#include "tlhat/trace.hpp"

using namespace tlhat;

// Products of random basis elements; the product cache is warm after the first iteration.
static void BM_Multiply(benchmark::State& state) {
  const System sys = System::affine_of(static_cast<int>(state.range(0)));
  RandomSource rs(1);
  std::vector<Element> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(rs.element(sys, static_cast<int>(state.range(1)), 2));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(xs[i % 64], xs[(i * 7 + 3) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Multiply)->Args({2, 4})->Args({2, 8})->Args({3, 6});

static void BM_CoxeterPower(benchmark::State& state) {
  const Element cox = cox_element(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(power(cox, state.range(1)));
}
BENCHMARK(BM_CoxeterPower)->Args({2, 4})->Args({3, 4});

static void BM_Rho(benchmark::State& state) {
  const int n1 = static_cast<int>(state.range(0));
  const auto heaps = enumerate_fc(System::affine_of(n1 - 1), 6);
  for (auto _ : state)
    for (const Heap& h : heaps) benchmark::DoNotOptimize(rho_g(n1, h));
}
BENCHMARK(BM_Rho)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const int n1 = static_cast<int>(state.range(0));
  const auto heaps = enumerate_fc(System::affine_of(n1 - 1), static_cast<int>(state.range(1)));
  for (auto _ : state)
    for (const Heap& h : heaps) benchmark::DoNotOptimize(classify_affine(h, n1));
}
BENCHMARK(BM_Classify)->Args({3, 10})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void BM_ReduceTrace(benchmark::State& state) {
  const Element x = power(cox_element(2), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_trace_to_markov(x));
}
BENCHMARK(BM_ReduceTrace)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Solver(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(trace_relation_solver(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
}
BENCHMARK(BM_Solver)->Args({3, 4})->Args({3, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
