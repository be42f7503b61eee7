#include <benchmark/benchmark.h>

#include "ppw/automata.hpp"
#include "ppw/generators.hpp"
#include "ppw/powers.hpp"
#include "ppw/pseudoperiod.hpp"
#include "ppw/search.hpp"

using namespace ppw;

static void BM_PseudoperiodCheck(benchmark::State& state) {
  const Word t = named_sequence("t", static_cast<std::size_t>(state.range(0)));
  const PpTuple p({1, 8, 9});
  for (auto _ : state) benchmark::DoNotOptimize(is_pseudoperiod(t, p));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PseudoperiodCheck)->Range(1 << 10, 1 << 18);

static void BM_Enumerate(benchmark::State& state) {
  const Word rs = named_sequence("rs", 1 << 15);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_pseudoperiods(rs, 3, static_cast<std::size_t>(state.range(0)), threads));
  }
}
BENCHMARK(BM_Enumerate)->Args({16, 1})->Args({32, 1})->Args({32, 4})->Unit(benchmark::kMillisecond);

static void BM_PowerDetection(benchmark::State& state) {
  const Word w = apply_morphism(shipped_morphism("sha3"), named_sequence("t", 4096))
                     .prefix(static_cast<std::size_t>(state.range(0)));
  const Exponent e(3, 1, true);
  for (auto _ : state) benchmark::DoNotOptimize(contains_power_at_least(w, e));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PowerDetection)->RangeMultiplier(4)->Range(1 << 8, 1 << 14)->Complexity()->Unit(benchmark::kMicrosecond);

static void BM_CriticalExponent(benchmark::State& state) {
  const Word t = named_sequence("t", static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(critical_exponent(t));
}
BENCHMARK(BM_CriticalExponent)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Unit(benchmark::kMicrosecond);

static void BM_TreeSearch(benchmark::State& state) {
  SearchSpec s;
  s.pp = PpTuple({static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1))});
  s.forbidden = Exponent(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(longest_constrained_word(s));
}
BENCHMARK(BM_TreeSearch)->Args({1, 3})->Args({3, 4})->Args({6, 8})->Unit(benchmark::kMillisecond);

static void BM_DfaEnumerate(benchmark::State& state) {
  const auto& d = triple_automaton();
  for (auto _ : state) benchmark::DoNotOptimize(dfa_enumerate(d, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_DfaEnumerate)->RangeMultiplier(4)->Range(128, 8192)->Unit(benchmark::kMillisecond);

static void BM_DfaAccepts(benchmark::State& state) {
  const auto& d = triple_automaton();
  std::uint64_t a = 1;
  for (auto _ : state) {
    const std::uint64_t t[] = {a, a + 1024, a + 2048};
    benchmark::DoNotOptimize(dfa_accepts(d, t));
    a = a % 100000 + 1;
  }
}
BENCHMARK(BM_DfaAccepts);

BENCHMARK_MAIN();
