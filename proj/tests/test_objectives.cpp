#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "submax/objectives.hpp"
#include "submax/rng.hpp"
#include "testutil.hpp"

using namespace submax;

TEST_CASE("cut value on the triangle") {
  auto g = std::make_shared<WeightedGraph>();
  g->n = 3;
  g->edges = {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}};
  CutObjective f(g);
  CHECK(f.evaluate(Subset{0}) == doctest::Approx(3.0));
  CHECK(f.evaluate(Subset{1}) == doctest::Approx(4.0));
  CHECK(f.evaluate(Subset{2}) == doctest::Approx(5.0));
  CHECK(f.evaluate(Subset{}) == 0.0);
  CHECK(f.evaluate(Subset{0, 1, 2}) == 0.0);
  CHECK(f.ground_size() == 3);
}

TEST_CASE("graph validation and degrees") {
  WeightedGraph g;
  g.n = 4;
  g.edges = {{0, 1, 1.0}, {1, 2, 0.5}};
  g.validate();
  CHECK(g.degrees() == std::vector<int>{1, 2, 1, 0});

  WeightedGraph bad = g;
  bad.edges.push_back({1, 4, 1.0});
  CHECK_THROWS(bad.validate());
  bad = g;
  bad.edges.push_back({2, 2, 1.0});
  CHECK_THROWS(bad.validate());
  bad = g;
  bad.edges.push_back({3, 2, -1.0});
  CHECK_THROWS(bad.validate());
}

TEST_CASE("oracle cut agrees with the edge-scan route") {
  RngStream rng(21, 0);
  auto g = std::make_shared<WeightedGraph>();
  g->n = 10;
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      if (rng.next_unit() < 0.4) g->edges.push_back({u, v, rng.next_unit()});
  CutObjective f(g);

  for (int trial = 0; trial < 100; ++trial) {
    Subset s;
    for (int e = 0; e < 10; ++e)
      if (rng.next_unit() < 0.5) s.push_back(e);
    CHECK(f.evaluate(s) == doctest::Approx(weighted_cut(s, *g)).epsilon(1e-12));
  }
}

TEST_CASE("similarity from features") {
  const std::vector<std::vector<double>> feats = {{0.0, 0.0}, {0.0, 0.0}, {0.3, 0.4}};
  const SimilarityMatrix sim = similarity_from_features(feats, 4.0);
  CHECK(sim.n == 3);
  CHECK(sim.at(0, 0) == doctest::Approx(1.0));
  CHECK(sim.at(0, 1) == doctest::Approx(1.0));
  CHECK(sim.at(0, 2) == doctest::Approx(std::exp(-2.0)));
  CHECK(sim.at(0, 2) == doctest::Approx(0.135335).epsilon(1e-5));

  RngStream rng(9, 2);
  std::vector<std::vector<double>> rand_feats(5);
  for (auto& row : rand_feats) row = {rng.next_unit(), rng.next_unit(), rng.next_unit()};
  const SimilarityMatrix rs = similarity_from_features(rand_feats, 2.5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      CHECK(rs.at(i, j) == doctest::Approx(rs.at(j, i)));
      double d2 = 0;
      for (int t = 0; t < 3; ++t) {
        const double diff = rand_feats[i][t] - rand_feats[j][t];
        d2 += diff * diff;
      }
      CHECK(rs.at(i, j) == doctest::Approx(std::exp(-2.5 * std::sqrt(d2))));
    }
}

TEST_CASE("diversity value on a two-point instance") {
  SimilarityMatrix sim;
  sim.n = 2;
  sim.s = {1.0, 0.5, 0.5, 1.0};
  sim.validate();
  DiversityObjective f(std::make_shared<SimilarityMatrix>(sim));
  CHECK(f.evaluate(Subset{}) == 0.0);
  CHECK(f.evaluate(Subset{0}) == doctest::Approx(0.25));
  CHECK(f.evaluate(Subset{1}) == doctest::Approx(0.25));
  CHECK(f.evaluate(Subset{0, 1}) == 0.0);
}

TEST_CASE("diversity oracle matches the double-sum route and stays nonnegative") {
  RngStream rng(31, 0);
  std::vector<std::vector<double>> feats(7);
  for (auto& row : feats) row = {rng.next_unit(), rng.next_unit()};
  auto sim = std::make_shared<SimilarityMatrix>(similarity_from_features(feats, 3.0));
  DiversityObjective f(sim);

  testutil::for_each_subset(7, [&](const Subset& s) {
    const double v = f.evaluate(s);
    CHECK(v == doctest::Approx(diversity_value(s, *sim)).epsilon(1e-12));
    CHECK(v >= -1e-12);
  });
  CHECK(f.evaluate(Subset{0, 1, 2, 3, 4, 5, 6}) == 0.0);
}

TEST_CASE("modular objective sums weights") {
  ModularObjective f({1.5, 0.0, 2.5});
  CHECK(f.evaluate(Subset{}) == 0.0);
  CHECK(f.evaluate(Subset{0, 2}) == doctest::Approx(4.0));
  CHECK(f.ground_size() == 3);
  CHECK_THROWS(ModularObjective({1.0, -0.5}));
}

TEST_CASE("built-in objectives are submodular, exhaustively checked") {
  const int n = 7;
  RngStream rng(41, 0);

  auto g = std::make_shared<WeightedGraph>();
  g->n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < 0.5) g->edges.push_back({u, v, rng.next_unit()});
  CutObjective cut(g);
  const auto cut_vals = testutil::all_values(cut, n);
  CHECK(testutil::check_submodular(cut_vals, n));
  CHECK(testutil::check_nonnegative(cut_vals));

  std::vector<std::vector<double>> feats(n);
  for (auto& row : feats) row = {rng.next_unit(), rng.next_unit()};
  DiversityObjective div(std::make_shared<SimilarityMatrix>(similarity_from_features(feats, 4.0)));
  const auto div_vals = testutil::all_values(div, n);
  CHECK(testutil::check_submodular(div_vals, n));
  CHECK(testutil::check_nonnegative(div_vals));

  std::vector<double> w(n);
  for (auto& x : w) x = rng.next_unit();
  ModularObjective mod(w);
  const auto mod_vals = testutil::all_values(mod, n);
  CHECK(testutil::check_submodular(mod_vals, n));
  CHECK(testutil::check_monotone(mod_vals, n));
}

TEST_CASE("coverage helper is monotone submodular") {
  const Instance inst = testutil::random_instance(8, 1, 1, testutil::ObjKind::kCoverage, 55);
  const auto vals = testutil::all_values(*inst.objective, 8);
  CHECK(testutil::check_submodular(vals, 8));
  CHECK(testutil::check_monotone(vals, 8));
  CHECK(testutil::check_nonnegative(vals));
  CHECK(vals[0] == 0.0);
}

TEST_CASE("cut of a vertex subset is never negative") {
  const Instance inst = testutil::random_instance(8, 1, 1, testutil::ObjKind::kCut, 91);
  const auto vals = testutil::all_values(*inst.objective, 8);
  CHECK(testutil::check_nonnegative(vals, 0.0));
  CHECK(vals[0] == 0.0);
  CHECK(vals.back() == 0.0);
}
