#include <benchmark/benchmark.h>

#include "weylkit/fixtures.hpp"
#include "weylkit/normalizer.hpp"
#include "weylkit/repro.hpp"
#include "weylkit/translations.hpp"

using namespace weylkit;

static void BM_EvaluateWord(benchmark::State& state) {
  const RootSystem& rs = geb_system().rs;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_word("s0 s1 s4 s5 sigma12 sigma12 s2 s3 s2", rs));
}
BENCHMARK(BM_EvaluateWord);

static void BM_StabilizerSearch(benchmark::State& state) {
  const auto& geb = geb_system();
  const std::vector<RootVec> targets = {geb.root("gamma0"), geb.root("gamma1")};
  const SearchOptions opts{static_cast<int>(state.range(0)), 5'000'000};
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_search(targets, {}, geb.rs, opts));
}
BENCHMARK(BM_StabilizerSearch)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_GroupClosure(benchmark::State& state) {
  const RootSystem& rs = geb_system().rs;
  const std::vector<GroupElement> gens = {evaluate_word("s0 s1 s4 s5", rs), evaluate_word("sigma12", rs),
                                          evaluate_word("s0 s1", rs)};
  for (auto _ : state) benchmark::DoNotOptimize(generate_group(gens, rs.size()));
}
BENCHMARK(BM_GroupClosure);

static void BM_QuasiAnalysis(benchmark::State& state) {
  const auto& geb = geb_system();
  const GroupElement t = find_named(second_variation_elements(geb), "secondvar.t_eta1").element;
  const auto subs = geb.subsystems();
  for (auto _ : state) benchmark::DoNotOptimize(quasi_translation_analysis(t, subs, geb.rs));
}
BENCHMARK(BM_QuasiAnalysis);

static void BM_NormalizerBeta(benchmark::State& state) {
  const auto& geb = geb_system();
  const auto auts = geb.cyclic_automorphisms();
  const auto known = geb.subsystems();
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_normalizer(geb.beta, auts, geb.rs, SearchOptions{8, 5'000'000}, known));
}
BENCHMARK(BM_NormalizerBeta)->Unit(benchmark::kMillisecond);

static void BM_Reproduce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reproduce("all"));
}
BENCHMARK(BM_Reproduce)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
