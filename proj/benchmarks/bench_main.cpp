#include <benchmark/benchmark.h>

#include "lrslab/factor.hpp"
#include "lrslab/inequality.hpp"
#include "lrslab/recurrence.hpp"
#include "lrslab/sieve.hpp"
#include "lrslab/spec_io.hpp"

using namespace lrslab;

// The performance floor: 1e8 in under 60 s, tracked here with 2x slack.
static void BM_SieveRange(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  SieveConfig cfg;
  cfg.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for_each_segment(1, hi + 1, cfg, [&](const SieveTable& t, std::size_t) { acc += t.phi.back(); });
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_SieveRange)->Args({1'000'000, 1})->Args({100'000'000, 1})->Args({100'000'000, 8})
    ->Unit(benchmark::kSecond)->Iterations(1)->UseRealTime();

static void BM_SieveMaterialized(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    SieveTable t = sieve_range(1, hi + 1);
    benchmark::DoNotOptimize(t.phi.data());
  }
}
BENCHMARK(BM_SieveMaterialized)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_FactorFibonacci(benchmark::State& state) {
  const BigInt m = term(fibonacci_spec(), state.range(0)).value;
  for (auto _ : state) {
    FactorResult f = factor(m, FactorBudget{});
    benchmark::DoNotOptimize(f.cofactor);
  }
}
BENCHMARK(BM_FactorFibonacci)->Arg(90)->Arg(120)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_TermMatrix(benchmark::State& state) {
  const RecurrenceSpec s = complex_lucas_spec();
  for (auto _ : state) benchmark::DoNotOptimize(term_matrix(s, state.range(0)));
}
BENCHMARK(BM_TermMatrix)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_CensusFibonacci(benchmark::State& state) {
  for (auto _ : state) {
    CensusReport r = census(fibonacci_spec(), 120, InequalityKind::Sigma);
    benchmark::DoNotOptimize(r.fails);
  }
}
BENCHMARK(BM_CensusFibonacci)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
