#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "submax/rng.hpp"
#include "submax/subset.hpp"

using namespace submax;

TEST_CASE("subset helpers") {
  Subset s = {1, 4, 7};
  CHECK(contains(s, 4));
  CHECK_FALSE(contains(s, 5));
  CHECK(is_sorted_unique(s));
  CHECK_FALSE(is_sorted_unique(Subset{1, 1, 2}));
  CHECK_FALSE(is_sorted_unique(Subset{2, 1}));
  CHECK(is_sorted_unique(Subset{}));

  CHECK(with_element(s, 5) == Subset{1, 4, 5, 7});
  CHECK(with_element(s, 0) == Subset{0, 1, 4, 7});
  CHECK(with_element(s, 9) == Subset{1, 4, 7, 9});
  CHECK(with_element(s, 4) == s);
  CHECK(with_element(Subset{}, 3) == Subset{3});

  CHECK(union_sorted(Subset{1, 3}, Subset{2, 3, 5}) == Subset{1, 2, 3, 5});
  CHECK(union_sorted(Subset{}, s) == s);
  CHECK(difference_sorted(Subset{1, 2, 3, 4}, Subset{2, 4}) == Subset{1, 3});
  CHECK(difference_sorted(s, Subset{}) == s);
  CHECK(difference_sorted(Subset{}, s).empty());

  CHECK(ids_to_string(s) == "1 4 7");
  CHECK(ids_to_string(s, ',') == "1,4,7");
  CHECK(ids_to_string(Subset{}).empty());
}

TEST_CASE("rng streams are deterministic and independent") {
  RngStream a(42, 0), b(42, 0), c(42, 1);
  std::vector<std::uint64_t> xs, ys, zs;
  for (int i = 0; i < 16; ++i) {
    xs.push_back(a.next_u64());
    ys.push_back(b.next_u64());
    zs.push_back(c.next_u64());
  }
  CHECK(xs == ys);
  CHECK(xs != zs);

  RngStream other(43, 0);
  std::vector<std::uint64_t> ws;
  for (int i = 0; i < 16; ++i) ws.push_back(other.next_u64());
  CHECK(xs != ws);
}

TEST_CASE("rng uniform helpers stay in range") {
  RngStream r(7, 3);
  for (int i = 0; i < 2000; ++i) {
    const double u = r.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = r.next_below(13);
    CHECK(v < 13);
    seen.insert(v);
  }
  CHECK(seen.size() == 13);
}

TEST_CASE("next_unit covers both halves of the unit interval") {
  RngStream r(99, 0);
  int low = 0;
  const int draws = 4000;
  for (int i = 0; i < draws; ++i)
    if (r.next_unit() < 0.5) ++low;
  CHECK(low > draws / 2 - 300);
  CHECK(low < draws / 2 + 300);
}

TEST_CASE("derive_seed separates task coordinates") {
  CHECK(derive_seed(1, 2, 3, 4) == derive_seed(1, 2, 3, 4));
  CHECK(derive_seed(1, 2, 3, 4) != derive_seed(1, 2, 4, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
  CHECK(derive_seed(0, 0) != derive_seed(0, 1));

  std::set<std::uint64_t> all;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) all.insert(derive_seed(5, a, b, c));
  CHECK(all.size() == 8u * 8u * 8u);
}

TEST_CASE("splitmix64 mixes zero") {
  CHECK(splitmix64(0) != 0);
  CHECK(splitmix64(1) != splitmix64(2));
}
