#include <benchmark/benchmark.h>

#include "harness/generators.h"
#include "logicwb/decision.h"
#include "logicwb/equivalence.h"
#include "logicwb/semantics.h"
#include "logicwb/transforms.h"

namespace logicwb {
namespace {

harness::StructureSpec sized(std::size_t n) { return {n, n, {"p", "q"}, {"R"}, 3.0 / n, 0.4}; }

void BM_EvalModal(benchmark::State& state) {
  auto rng = harness::case_rng(1, 0);
  PointedStructure m = harness::random_pointed(rng, sized(state.range(0)));
  ModalFormula f = harness::random_modal(rng, {4, 30, {"p", "q"}, 3, false});
  for (auto _ : state) benchmark::DoNotOptimize(eval_modal(m, f));
}
BENCHMARK(BM_EvalModal)->Arg(16)->Arg(128)->Arg(1024);

void BM_Bisimilar(benchmark::State& state) {
  auto rng = harness::case_rng(2, 0);
  PointedStructure m = harness::random_pointed(rng, sized(state.range(0)));
  PointedStructure n = harness::duplicate_node(rng, m);
  for (auto _ : state) benchmark::DoNotOptimize(bisimilar(m, n).equivalent);
}
BENCHMARK(BM_Bisimilar)->Arg(16)->Arg(128)->Arg(512);

void BM_CountingBisimilar(benchmark::State& state) {
  auto rng = harness::case_rng(3, 0);
  PointedStructure m = harness::random_pointed(rng, sized(state.range(0)));
  PointedStructure n = harness::duplicate_node(rng, m);
  for (auto _ : state) benchmark::DoNotOptimize(counting_bisimilar(m, n).equivalent);
}
BENCHMARK(BM_CountingBisimilar)->Arg(16)->Arg(128);

void BM_PebbleEquiv(benchmark::State& state) {
  auto rng = harness::case_rng(4, 0);
  Structure m = harness::random_structure(rng, sized(6));
  Structure n = harness::random_structure(rng, sized(6));
  for (auto _ : state) benchmark::DoNotOptimize(pebble_equiv(m, n, state.range(0)).equivalent);
}
BENCHMARK(BM_PebbleEquiv)->DenseRange(1, 3);

void BM_SatBasicModal(benchmark::State& state) {
  auto rng = harness::case_rng(5, 0);
  ModalFormula f = harness::random_modal(rng, {static_cast<std::size_t>(state.range(0)), 24, {"p", "q"}, 0, false});
  for (auto _ : state) benchmark::DoNotOptimize(sat_basic_modal(f).satisfiable);
}
BENCHMARK(BM_SatBasicModal)->DenseRange(2, 4);

void BM_Unravel(benchmark::State& state) {
  auto rng = harness::case_rng(6, 0);
  PointedStructure m = harness::random_pointed(rng, {8, 8, {"p"}, {"R"}, 0.3, 0.4});
  for (auto _ : state) benchmark::DoNotOptimize(unravel(m, state.range(0)).structure.size());
}
BENCHMARK(BM_Unravel)->DenseRange(2, 6, 2);

}  // namespace
}  // namespace logicwb

BENCHMARK_MAIN();
