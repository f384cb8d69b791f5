#include <memory>
#include <vector>

#include "doctest.h"
#include "submax/objectives.hpp"
#include "submax/oracle.hpp"
#include "submax/rng.hpp"
#include "testutil.hpp"

using namespace submax;

namespace {

std::shared_ptr<CutObjective> triangle_cut() {
  auto g = std::make_shared<WeightedGraph>();
  g->n = 3;
  g->edges = {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}};
  return std::make_shared<CutObjective>(g);
}

}  // namespace

TEST_CASE("marginal gain on the triangle cut") {
  auto f = triangle_cut();
  CHECK(f->evaluate(Subset{0}) == doctest::Approx(3.0));
  CHECK(f->evaluate(Subset{0, 1}) == doctest::Approx(5.0));
  CHECK(marginal_gain(*f, Subset{0}, 1) == doctest::Approx(2.0));
  CHECK(marginal_gain(*f, Subset{0}, 3.0, 1) == doctest::Approx(2.0));
  CHECK(marginal_gain(*f, Subset{0, 1}, 1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(marginal_gain(*f, Subset{0}, 5), std::out_of_range);
  CHECK_THROWS_AS(marginal_gain(*f, Subset{0}, -1), std::out_of_range);
}

TEST_CASE("marginal gain equals full re-evaluation on a random cut") {
  const int n = 8;
  RngStream rng(11, 0);
  auto g = std::make_shared<WeightedGraph>();
  g->n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < 0.6) g->edges.push_back({u, v, rng.next_unit()});
  CutObjective f(g);

  testutil::for_each_subset(n, [&](const Subset& s) {
    for (int e = 0; e < n; ++e) {
      if (contains(s, e)) continue;
      const double direct = f.evaluate(with_element(s, e)) - f.evaluate(s);
      CHECK(marginal_gain(f, s, e) == doctest::Approx(direct).epsilon(1e-12));
    }
  });
}

TEST_CASE("call counting and clones") {
  auto f = triangle_cut();
  CHECK(f->call_count() == 0);
  f->evaluate(Subset{});
  f->evaluate(Subset{0});
  CHECK(f->call_count() == 2);

  auto fresh = f->clone();
  CHECK(fresh->call_count() == 0);
  CHECK(fresh->ground_size() == 3);
  fresh->evaluate(Subset{1});
  CHECK(fresh->call_count() == 1);
  CHECK(f->call_count() == 2);
  CHECK(fresh->evaluate(Subset{2}) == f->evaluate(Subset{2}));
}

TEST_CASE("marginal gain with cached base saves one call") {
  auto f = triangle_cut();
  const double base = f->evaluate(Subset{0});
  const long long before = f->call_count();
  marginal_gain(*f, Subset{0}, base, 1);
  CHECK(f->call_count() == before + 1);
  marginal_gain(*f, Subset{0}, 1);
  CHECK(f->call_count() == before + 3);
}

TEST_CASE("contracted objective shifts by the seed") {
  auto f = triangle_cut();
  const Subset a = {0};
  ContractedObjective z(*f, a);
  CHECK(z.base_value() == doctest::Approx(3.0));
  CHECK(z.ground_size() == 3);

  CHECK(z.evaluate(Subset{}) == doctest::Approx(0.0));
  CHECK(z.evaluate(Subset{1}) == doctest::Approx(2.0));
  CHECK(z.evaluate(Subset{2}) == doctest::Approx(1.0));
  CHECK(z.evaluate(Subset{1, 2}) == doctest::Approx(-3.0));
  CHECK(z.evaluate(Subset{0, 1}) == doctest::Approx(2.0));
}

TEST_CASE("contracted objective forwards one parent call per evaluate") {
  auto f = triangle_cut();
  ContractedObjective z(*f, Subset{0}, 3.0);
  const long long before = f->call_count();
  z.evaluate(Subset{1});
  z.evaluate(Subset{1, 2});
  CHECK(f->call_count() == before + 2);
  CHECK(z.call_count() == 2);

  ContractedObjective paid(*f, Subset{0});
  CHECK(f->call_count() == before + 3);
  CHECK(paid.base_value() == doctest::Approx(3.0));
}

TEST_CASE("contracting by the empty set is the identity") {
  auto f = triangle_cut();
  ContractedObjective z(*f, Subset{});
  CHECK(z.base_value() == doctest::Approx(0.0));
  testutil::for_each_subset(3, [&](const Subset& s) {
    CHECK(z.evaluate(s) == doctest::Approx(f->evaluate(s)));
  });
}
