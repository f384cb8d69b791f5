#include <cmath>
#include <memory>
#include <set>
#include <vector>

#include "doctest.h"
#include "submax/baselines.hpp"
#include "submax/errors.hpp"
#include "submax/instance.hpp"
#include "submax/objectives.hpp"
#include "submax/sprout.hpp"
#include "submax/sproutpp.hpp"
#include "testutil.hpp"

using namespace submax;

namespace {

MatroidIntersection single_uniform(int cap) {
  std::vector<MatroidPtr> members = {std::make_shared<UniformMatroid>(cap)};
  return MatroidIntersection(std::move(members));
}

Knapsack unit_knapsack(std::vector<std::vector<double>> costs) {
  Knapsack k;
  k.costs = std::move(costs);
  k.budgets.assign(k.costs.size(), 1.0);
  return k;
}

Instance triangle_instance() {
  auto g = std::make_shared<WeightedGraph>();
  g->n = 3;
  g->edges = {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}};
  Instance inst;
  inst.n = 3;
  inst.objective = std::make_shared<CutObjective>(g);
  inst.matroids = single_uniform(1);
  inst.knapsack = unit_knapsack({{0.1, 0.1, 0.1}});
  inst.validate();
  return inst;
}

Instance cycle_instance() {
  auto g = std::make_shared<WeightedGraph>();
  g->n = 4;
  g->edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}};
  Instance inst;
  inst.n = 4;
  inst.objective = std::make_shared<CutObjective>(g);
  inst.matroids = single_uniform(2);
  inst.knapsack = unit_knapsack({{0.25, 0.25, 0.25, 0.25}});
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("smooth endpoint updates") {
  CHECK(smooth_update(10, false, 19.0, 2.0) == doctest::Approx(14.5));
  CHECK(smooth_update(10, true, 1.0, 2.0) == doctest::Approx(5.5));
  CHECK(smooth_update(10, false, 19.0, 1.0) == doctest::Approx(10.0));
  CHECK(smooth_update(10, true, 1.0, 1.0) == doctest::Approx(10.0));
  CHECK(smooth_update(4, false, 4.0, 3.0) == doctest::Approx(4.0));
}

TEST_CASE("alpha bound reference values") {
  CHECK(alpha_bound(2, 1, 0.25) == doctest::Approx(1.21875));
  CHECK(alpha_bound(2, 1, 0.25) == doctest::Approx(0.75 * (3.0 - 0.5625) / 1.5));
  CHECK(alpha_bound(2, 1, 1e-12) == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(alpha_bound(3, 2, 1e-12) == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(0.5 <= alpha_bound(2, 1, 0.25));
}

TEST_CASE("success probability reference values") {
  CHECK(success_probability(5, 100, 20) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(success_probability(5, 100, 20) == doctest::Approx(0.63212).epsilon(1e-5));
  CHECK(success_probability(1, 64, 64) == doctest::Approx(1.0 - std::exp(-1.0)));
  CHECK(success_probability(2, 10, 100000) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(success_probability(0, 10, 5) == doctest::Approx(0.0));
}

TEST_CASE("best single element scan") {
  const auto [star, val] = best_single(triangle_instance());
  CHECK(star == 2);
  CHECK(val == doctest::Approx(5.0));

  Instance flat;
  flat.n = 3;
  flat.objective = std::make_shared<ModularObjective>(std::vector<double>{2.0, 2.0, 2.0});
  flat.matroids = single_uniform(1);
  flat.knapsack = unit_knapsack({{0.1, 0.1, 0.1}});
  flat.validate();
  const auto [tied, tied_val] = best_single(flat);
  CHECK(tied == 0);
  CHECK(tied_val == doctest::Approx(2.0));

  Instance excluded = flat;
  excluded.objective = std::make_shared<ModularObjective>(std::vector<double>{1.0, 9.0, 2.0});
  excluded.knapsack = unit_knapsack({{0.1, 1.7, 0.1}});
  const auto [kept, kept_val] = best_single(excluded);
  CHECK(kept == 2);
  CHECK(kept_val == doctest::Approx(2.0));
}

TEST_CASE("best single matches an exhaustive scan on a random instance") {
  const Instance inst = testutil::random_instance(20, 1, 1, testutil::ObjKind::kCut, 404);
  auto f = inst.objective->clone();
  int want = -1;
  double want_val = -1;
  for (int e = 0; e < inst.n; ++e) {
    if (!is_feasible(inst, Subset{e})) continue;
    const double v = f->evaluate(Subset{e});
    if (v > want_val) {
      want = e;
      want_val = v;
    }
  }
  const auto [got, got_val] = best_single(inst);
  CHECK(got == want);
  CHECK(got_val == doctest::Approx(want_val));
}

TEST_CASE("assumption violations flag weak optimum elements") {
  const Instance inst = triangle_instance();
  CHECK(assumption_violations(inst, Subset{2}, 0.5).empty());
  CHECK(assumption_violations(inst, Subset{2}, 0.0).empty());
  CHECK(assumption_violations(inst, Subset{0}, 0.0) == std::vector<int>{0});
  CHECK(assumption_violations(inst, Subset{0}, 0.7).empty());
  CHECK(assumption_violations(inst, Subset{0, 1}, 0.1) == std::vector<int>{0, 1});
}

TEST_CASE("sproutpp rejects bad parameters and degenerate instances") {
  const Instance inst = triangle_instance();
  SproutPPParams bad;
  bad.alpha = -0.1;
  CHECK_THROWS_AS(sproutpp(inst, bad), std::invalid_argument);
  SproutPPParams bad_mu;
  bad_mu.mu = 0.9;
  CHECK_THROWS_AS(sproutpp(inst, bad_mu), std::invalid_argument);
  SproutPPParams bad_tc;
  bad_tc.t_counter = 0;
  CHECK_THROWS_AS(sproutpp(inst, bad_tc), std::invalid_argument);

  Instance empty_pool;
  empty_pool.n = 2;
  empty_pool.objective = std::make_shared<ModularObjective>(std::vector<double>{1.0, 1.0});
  empty_pool.matroids = single_uniform(2);
  empty_pool.knapsack = unit_knapsack({{1.5, 1.5}});
  empty_pool.validate();
  CHECK_THROWS_AS(sproutpp(empty_pool, SproutPPParams{}), DegenerateInstanceError);
}

TEST_CASE("sproutpp is reproducible and thread-count invariant") {
  const Instance inst = testutil::random_instance(14, 1, 1, testutil::ObjKind::kCut, 501);
  SproutPPParams params;
  params.seed = 7;
  const SproutPPResult a = sproutpp(inst, params);
  const SproutPPResult b = sproutpp(inst, params);
  CHECK(a.record.set == b.record.set);
  CHECK(a.record.value == b.record.value);
  CHECK(a.record.oracle_calls == b.record.oracle_calls);
  CHECK(a.visited == b.visited);
  CHECK(a.filter_passes == b.filter_passes);

  SproutPPParams par = params;
  par.jobs = 3;
  const SproutPPResult c = sproutpp(inst, par);
  CHECK(c.record.set == a.record.set);
  CHECK(c.record.value == a.record.value);
  CHECK(c.record.oracle_calls == a.record.oracle_calls);
  CHECK(c.visited == a.visited);
}

TEST_CASE("sproutpp sampling bookkeeping is consistent") {
  const Instance inst = testutil::random_instance(15, 2, 2, testutil::ObjKind::kDiversity, 502);
  SproutPPParams params;
  params.seed = 11;
  params.t_counter = 3;
  params.alpha = 0.4;
  const SproutPPResult res = sproutpp(inst, params);

  CHECK(res.record.algo == "sproutpp");
  REQUIRE(res.record.seed.has_value());
  CHECK(*res.record.seed == 11);
  REQUIRE(res.record.visited.has_value());
  CHECK(*res.record.visited == static_cast<int>(res.visited.size()));
  REQUIRE(res.record.filter_passes.has_value());
  CHECK(*res.record.filter_passes == res.filter_passes);

  const auto pool = singleton_feasible_pool(inst);
  std::set<int> seen;
  for (int e : res.visited) {
    CHECK(contains(std::span<const int>(pool), e));
    CHECK(seen.insert(e).second);
  }

  auto f = inst.objective->clone();
  double star = -1;
  for (int e : pool) star = std::max(star, f->evaluate(Subset{e}));
  const double cutoff = (1.0 - params.alpha) * star;
  int passes = 0;
  for (int e : res.visited)
    if (f->evaluate(Subset{e}) >= cutoff) ++passes;
  CHECK(passes == res.filter_passes);
  if (static_cast<int>(res.visited.size()) < static_cast<int>(pool.size()))
    CHECK(res.filter_passes == 3);

  CHECK(testutil::feasible_by_definition(inst, res.record.set));
  CHECK(res.record.oracle_calls > 0);
}

TEST_CASE("sproutpp output is never below its best processed sample") {
  const Instance inst = testutil::random_instance(12, 1, 2, testutil::ObjKind::kCut, 503);
  SproutPPParams params;
  params.seed = 23;
  const SproutPPResult res = sproutpp(inst, params);

  const auto pool = singleton_feasible_pool(inst);
  auto f = inst.objective->clone();
  double star = -1;
  for (int e : pool) star = std::max(star, f->evaluate(Subset{e}));
  const double cutoff = (1.0 - params.alpha) * star;
  double best_processed = 0;
  for (int e : res.visited) {
    const double v = f->evaluate(Subset{e});
    if (v >= cutoff) best_processed = std::max(best_processed, v);
  }
  CHECK(res.record.value >= best_processed - 1e-9);
}

TEST_CASE("exhaustive sampling with an open filter matches full enumeration") {
  const Instance inst = cycle_instance();
  const BruteForceResult opt = brute_force(inst);
  CHECK(opt.opt_value == doctest::Approx(4.0));

  // Same search knobs on both sides; on this cycle the shifted-gain filter
  // keeps every element, so the two pipelines run identical searches.
  SproutParams plain_params;
  plain_params.ell = 2;
  plain_params.beta = 5e-4;
  plain_params.gamma = 1e-6;
  const ResultRecord plain = sprout(inst, plain_params);

  SproutPPParams params;
  params.seed = 3;
  params.t_counter = 4;
  params.alpha = 1.0;
  params.mu = 1.0;
  const SproutPPResult sampled = sproutpp(inst, params);

  CHECK(sampled.filter_passes == 4);
  CHECK(static_cast<int>(sampled.visited.size()) == 4);
  CHECK(plain.value == doctest::Approx(sampled.record.value));
  CHECK(plain.value == doctest::Approx(4.0));
}
