#pragma once

#include <functional>
#include <span>
#include <vector>

#include "submax/knapsack.hpp"
#include "submax/matroid.hpp"
#include "submax/oracle.hpp"

namespace submax {

struct SgsParams {
  int ell = 1;       // number of disjoint candidate solutions, >= 1
  double rho = 0;    // density threshold multiplier on the summed cost
  double eps = 0.1;  // threshold decay; tau shrinks by (1 - eps) per round
};

// One accepted insertion, in order. tau and density_cost are the two sides of
// the acceptance test at that moment.
struct SgsStep {
  int t = 0;  // 1-based insertion index
  int element = 0;
  int candidate = 0;
  double gain = 0;
  double tau = 0;
  double density_cost = 0;  // rho * summed cost of the element
};

using SgsTrace = std::function<void(const SgsStep&)>;

struct SgsOutcome {
  Subset best;                    // argmax of z over the candidates (first on ties)
  double best_z = 0;              // z(best)
  std::vector<Subset> candidates; // all ell of them, pairwise disjoint
  bool violated = false;          // some acceptable element overflowed a knapsack
  long long oracle_calls = 0;     // z evaluations made by this invocation
  int rounds = 0;                 // threshold rounds executed
};

// Simultaneous threshold greedy over ell disjoint candidates.
//
// Scans elements in ascending id order and candidates in ascending index;
// an element joins the first candidate where the union stays independent in
// every matroid and the marginal z-gain beats both the current threshold tau
// and rho times the element's summed cost. If such an element would push a
// candidate past a knapsack budget, the violation flag latches and the next
// candidate is tried. tau starts at the best feasible singleton value v and
// decays by (1 - eps) per round down to eps * v / |ground|.
//
// costs must be normalized (budgets 1). z is assumed to have diminishing
// returns; the lazy gain bounds that prune the scan are exact under that
// assumption. Returns ell empty candidates if ground is empty or no feasible
// singleton has positive value. Throws std::invalid_argument for ell < 1.
SgsOutcome knapsack_sgs(const ValueOracle& z, std::span<const int> ground,
                        const MatroidIntersection& matroids, const Knapsack& costs,
                        const SgsParams& params, const SgsTrace& trace = {});

}  // namespace submax
