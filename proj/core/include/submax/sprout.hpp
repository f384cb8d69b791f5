#pragma once

#include <optional>
#include <span>
#include <vector>

#include "submax/instance.hpp"
#include "submax/result.hpp"
#include "submax/sgs.hpp"

namespace submax {

// Constants from the approximation analysis, all determined by (k, m, eps):
// p_cap = max(ceil(sqrt(1 + m)), k), ell = p_cap + 1, p = max(ell - 1, k),
// beta = (1 - eps)(1 - 1/ell - eps) / (p + 1 + m(1 - eps)),
// gamma = (p + 1) / (p + 1 + m(1 - eps)).
struct TheoryParams {
  int p_cap = 0;
  int ell = 0;
  int p = 0;
  double beta = 0;
  double gamma = 0;
};

// Throws std::invalid_argument if k < 1, m < 1, or eps is outside
// (0, 1 - 1/ell), where beta would not be positive.
TheoryParams theory_params(int k, int m, double eps);

// The density threshold probed at grid index b:
// beta * v_max * (1 + delta)^b + gamma * f_seed / c_enum. Requires v_max > 0.
double density_ratio(double beta, double v_max, double delta, int b, double gamma, double f_seed,
                     int c_enum);

// The threshold the analysis aims the grid search at, given the optimum's
// shifted value z_opt on the reduced instance.
double ideal_density_ratio(int p, int m, int ell, double eps, double z_opt, double f_seed,
                           int c_enum);

// Elements outside `a` whose shifted gain is small against the seed value:
// { e : c_enum * (f(a u {e}) - f(a)) <= f(a) }. Costs 1 + (n - |a|) oracle
// calls (or n - |a| when f_a is supplied).
Subset reduced_ground_set(const ValueOracle& f, const Subset& a, int c_enum);
Subset reduced_ground_set(const ValueOracle& f, const Subset& a, double f_a, int c_enum,
                          std::span<const int> pool);

// Fully resolved knobs for one enumeration pipeline.
struct SearchParams {
  int c_enum = 1;
  int ell = 1;
  double eps = 0.25;
  double delta = 0.25;
  double beta = 0;
  double gamma = 0;
};

struct DensityProbe {
  int b = 0;
  double rho = 0;
  bool violated = false;
  double value = 0;  // f(seed u S)
  Subset solution;   // seed u S
};

struct DensitySearchResult {
  Subset best;
  double best_value = 0;
  std::vector<DensityProbe> probes;
  double b_low = 0, b_high = 0;  // final bracket
};

// Grid search over the density exponent b in [1, ceil(ln |ground| / delta)].
// Each probe runs knapsack_sgs at rho(b) and collects seed u S_K as a
// candidate; a knapsack violation moves the lower endpoint up, otherwise the
// upper endpoint comes down. mu = 1 gives the exact halving search; mu > 1
// moves endpoints by the damped step b + (1-2E)(1 - 1/mu)|b_E - b|, with the
// probe count capped at the damped search's convergence bound (the damped
// update alone can stall just above interval length 1). Probes at a repeated
// b reuse the recorded outcome.
//
// `seed` (with value f_seed) is always collected, and the best candidate by
// f-value wins (first collected on ties). singleton_z, when provided, carries
// z({e}) for each ground element in order, sparing the initial scan.
DensitySearchResult density_search(const ValueOracle& f, const ValueOracle& z,
                                   const Subset& seed, double f_seed,
                                   std::span<const int> ground,
                                   const MatroidIntersection& matroids, const Knapsack& costs,
                                   const SearchParams& sp, double mu,
                                   std::span<const double> singleton_z = {},
                                   const SgsTrace& trace = {});

struct SproutParams {
  int c_enum = 1;
  double eps = 0.25;
  // Unset fields fall back to delta = eps and the theory_params values.
  std::optional<double> delta;
  std::optional<int> ell;
  std::optional<double> beta;
  std::optional<double> gamma;
  int jobs = 1;
};

SearchParams resolve_sprout_params(const SproutParams& p, int k, int m);

// Enumerates every feasible seed set of size c_enum (from the singleton-
// feasible pool, in lexicographic order), runs the density search on each
// reduced instance, and returns the best candidate found overall. If no
// feasible seed of that size exists, falls back to the best feasible set of
// size < c_enum seen during enumeration (the empty set at worst).
ResultRecord sprout(const Instance& inst, const SproutParams& params = {});

// The proven approximation guarantee: f(solution) >= coefficient * OPT,
// where r is the optimum's cardinality. ratio is 1 / coefficient.
struct ApproxBound {
  double coefficient = 0;
  double ratio = 0;
};
ApproxBound approx_bound(int k, int m, double eps, int c_enum, double r);

}  // namespace submax
