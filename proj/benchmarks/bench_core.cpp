#include <benchmark/benchmark.h>

#include "smtgi/smtgi.hpp"

using namespace smtgi;

static void BM_BuildAptMod(benchmark::State& state) {
  const DfaSample s = gen_mod_sample({7, static_cast<std::size_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(build_apt(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildAptMod)->Range(16, 1024)->Complexity();

static void BM_BuildAptCharSample(benchmark::State& state) {
  const TraceSample s = characterizing_sample(gen_random_mealy({static_cast<std::size_t>(state.range(0)), 3, 3, 1}), 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_apt(s));
}
BENCHMARK(BM_BuildAptCharSample)->DenseRange(2, 10, 4);

static void BM_EncodeNatural(benchmark::State& state) {
  const DfaSample s = gen_mod_sample({12, 100});
  for (auto _ : state) benchmark::DoNotOptimize(encode_natural(s, state.range(0), AxiomStyle::BooleanDisjunction));
}
BENCHMARK(BM_EncodeNatural)->Arg(4)->Arg(12);

static void BM_EncodeExpressive(benchmark::State& state) {
  const Apt apt = build_apt(gen_mod_sample({12, 100}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode_expressive(apt, state.range(0), AxiomStyle::BooleanDisjunction));
  }
}
BENCHMARK(BM_EncodeExpressive)->Arg(4)->Arg(12);

static void BM_EmitSmtlib(benchmark::State& state) {
  const Formula f = encode_expressive(build_apt(gen_mod_sample({12, 100})), 12, AxiomStyle::BooleanDisjunction);
  for (auto _ : state) benchmark::DoNotOptimize(emit_smtlib(f));
}
BENCHMARK(BM_EmitSmtlib);

static void BM_Equivalence(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Machine a = gen_random_mealy({n, 3, 3, 1});
  const Machine b = gen_random_mealy({n, 3, 3, 2});
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b));
}
BENCHMARK(BM_Equivalence)->Arg(8)->Arg(32)->Arg(128);

static void BM_CharacterizingSample(benchmark::State& state) {
  const MealyMachine m = gen_random_mealy({static_cast<std::size_t>(state.range(0)), 3, 3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(characterizing_sample(m, 0));
}
BENCHMARK(BM_CharacterizingSample)->Arg(4)->Arg(16);

static void BM_OracleMod3(benchmark::State& state) {
  const DfaSample s = gen_mod_sample({3, 9});
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_minimal(s, MachineKind::Dfa, {}));
}
BENCHMARK(BM_OracleMod3);
BENCHMARK_MAIN();
