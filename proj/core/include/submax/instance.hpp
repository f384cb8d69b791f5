#pragma once

#include <memory>
#include <span>
#include <vector>

#include "submax/knapsack.hpp"
#include "submax/matroid.hpp"
#include "submax/oracle.hpp"

namespace submax {

// One problem: maximize the objective subject to membership in every matroid
// and every knapsack row. Budgets are normalized to 1 by the builders; the
// feasibility check works for arbitrary positive budgets regardless.
struct Instance {
  int n = 0;
  std::shared_ptr<const ValueOracle> objective;
  MatroidIntersection matroids;
  Knapsack knapsack;

  void validate() const;
  int matroid_count() const { return matroids.size(); }
  int knapsack_count() const { return knapsack.rows(); }
};

bool is_feasible(const Instance& inst, std::span<const int> s);

// Elements feasible on their own; nothing outside this pool can ever be part
// of a feasible solution, so algorithms draw candidates from it.
std::vector<int> singleton_feasible_pool(const Instance& inst);

}  // namespace submax
