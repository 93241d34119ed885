// End-to-end learning through the external solver; skipped unless
// $SMT_SOLVER_CMD is set.
#include <benchmark/benchmark.h>

#include "smtgi/smtgi.hpp"

using namespace smtgi;

static void BM_LearnMod(benchmark::State& state) {
  const auto solver = SolverConfig::from_environment();
  if (!solver) {
    state.SkipWithError("SMT_SOLVER_CMD not set");
    return;
  }
  LearnOptions options;
  options.encoding = state.range(1) ? Encoding::Expressive : Encoding::Natural;
  options.solver = *solver;
  const DfaSample s = gen_mod_sample({static_cast<std::size_t>(state.range(0)), 30});
  for (auto _ : state) benchmark::DoNotOptimize(learn_minimal(s, options));
}
BENCHMARK(BM_LearnMod)->ArgsProduct({{2, 4, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
