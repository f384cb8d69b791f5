#pragma once

#include <optional>

#include "submax/instance.hpp"
#include "submax/result.hpp"
#include "submax/sprout.hpp"

namespace submax {

struct BruteForceResult {
  Subset opt_set;
  double opt_value = 0;
  long long sets_examined = 0;  // candidate sets whose feasibility was tested
};

// Exact optimum by depth-first enumeration of feasible sets (infeasible
// prefixes are pruned, which is exhaustive because feasibility is downward
// closed). size_cap additionally bounds the solution cardinality. Ties go to
// the first set in lexicographic visiting order. Throws ResourceError when
// the enumeration would exceed an internal work limit.
BruteForceResult brute_force(const Instance& inst, std::optional<int> size_cap = {});

// Repeatedly adds the feasible element of maximum strictly positive marginal
// gain (smallest id on ties) until none remains.
ResultRecord greedy(const Instance& inst);

// Runs greedy `rounds` times, each round on the ground set minus everything
// selected before; returns the best round. rounds >= 1.
ResultRecord repeated_greedy(const Instance& inst, int rounds);

// One density search seeded at the empty set: the enumeration-free core of
// the main algorithm. Same parameter resolution as sprout.
ResultRecord density_search_sgs(const Instance& inst, const SproutParams& params = {});

}  // namespace submax
