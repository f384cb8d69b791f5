#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "submax/baselines.hpp"
#include "submax/bench.hpp"
#include "submax/instance.hpp"
#include "submax/sgs.hpp"
#include "submax/sprout.hpp"
#include "submax/sproutpp.hpp"

namespace {

submax::Instance maxcut(int n, double p, std::uint64_t seed) {
  return submax::build_maxcut_instance(submax::gen_er_graph(n, p, seed));
}

void BM_CutEvaluate(benchmark::State& state) {
  const submax::Instance inst = maxcut(static_cast<int>(state.range(0)), 0.05, 1);
  auto f = inst.objective->clone();
  submax::Subset s;
  for (int e = 0; e < 10; ++e) s.push_back(2 * e);
  for (auto _ : state) benchmark::DoNotOptimize(f->evaluate(s));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CutEvaluate)->Arg(100)->Arg(400);

void BM_KnapsackSgs(benchmark::State& state) {
  const submax::Instance inst = maxcut(static_cast<int>(state.range(0)), 0.05, 2);
  auto f = inst.objective->clone();
  const std::vector<int> pool = submax::singleton_feasible_pool(inst);
  const submax::SgsParams params{2, 0.05, 0.25};
  for (auto _ : state) {
    const auto out = submax::knapsack_sgs(*f, pool, inst.matroids, inst.knapsack, params);
    benchmark::DoNotOptimize(out.best_z);
  }
}
BENCHMARK(BM_KnapsackSgs)->Arg(60)->Arg(120);

void BM_DensitySearch(benchmark::State& state) {
  const submax::Instance inst = maxcut(static_cast<int>(state.range(0)), 0.05, 3);
  const submax::SearchParams sp = submax::resolve_sprout_params(
      submax::SproutParams{}, inst.matroid_count(), inst.knapsack_count());
  const std::vector<int> pool = submax::singleton_feasible_pool(inst);
  auto f = inst.objective->clone();
  const submax::Subset a{pool.front()};
  const double f_a = f->evaluate(a);
  const submax::ContractedObjective z(*f, a, f_a);
  std::vector<int> ground(pool.begin() + 1, pool.end());
  const auto contracted = inst.matroids.contracted_by(a);
  const auto reduced = inst.knapsack.reduced_by(a);
  for (auto _ : state) {
    const auto res = submax::density_search(*f, z, a, f_a, ground, contracted, reduced, sp, 1.0);
    benchmark::DoNotOptimize(res.best_value);
  }
}
BENCHMARK(BM_DensitySearch)->Arg(60)->Arg(120);

void BM_Greedy(benchmark::State& state) {
  const submax::Instance inst = maxcut(static_cast<int>(state.range(0)), 0.05, 4);
  for (auto _ : state) {
    const auto rec = submax::greedy(inst);
    benchmark::DoNotOptimize(rec.value);
  }
}
BENCHMARK(BM_Greedy)->Arg(100)->Arg(200);

void BM_SproutPP(benchmark::State& state) {
  const submax::Instance inst = maxcut(static_cast<int>(state.range(0)), 0.05, 5);
  submax::SproutPPParams params;
  params.seed = 11;
  for (auto _ : state) {
    const auto res = submax::sproutpp(inst, params);
    benchmark::DoNotOptimize(res.record.value);
  }
}
BENCHMARK(BM_SproutPP)->Arg(40)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
