#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "submax/instance.hpp"
#include "submax/result.hpp"
#include "submax/sprout.hpp"

namespace submax {

// Damped endpoint update for the density search: from probe b with violation
// flag E, the tracked endpoint moves to b + (1 - 2E)(1 - 1/mu)|endpoint - b|.
// mu = 1 collapses to plain bisection (endpoint = b).
double smooth_update(int b, bool violated, double endpoint, double mu);

// Largest alpha for which the sampling filter is safe to apply, by the
// analysis: (1 - eps)(p + 1 - (1 - eps)^2) / (eps(p + 1) + m(1 - eps)).
double alpha_bound(int p, int m, double eps);

// Chance that some sampled seed lies inside an optimum of cardinality r when
// t_c filter-passing samples are drawn from n elements: 1 - exp(-r * t_c / n).
double success_probability(double r, int n, int t_c);

// Best feasible singleton (smallest id on ties) and its value.
// Throws DegenerateInstanceError if no singleton is feasible.
std::pair<int, double> best_single(const Instance& inst);

// Elements of a known optimum whose singleton value is too far below the best
// singleton for the sampling filter at this alpha: (1 + alpha) f({a}) < f(e*).
// Diagnostic for the sampling assumption; empty means the assumption holds.
std::vector<int> assumption_violations(const Instance& inst, const Subset& s_opt, double alpha);

struct SproutPPParams {
  std::uint64_t seed = 0;
  std::optional<int> t_counter;  // filter-passing samples to process; default ceil(n / 5)
  double alpha = 0.5;            // filter slack: process a iff f({a}) >= (1 - alpha) f({e*})
  double mu = 1.0;               // damping of the density search, >= 1
  int ell = 2;
  double eps = 0.25;
  std::optional<double> delta;   // default eps
  double beta = 5e-4;
  double gamma = 1e-6;
  int jobs = 1;
};

struct SproutPPResult {
  ResultRecord record;
  std::vector<int> visited;  // sampled ids in draw order, filter passes and fails alike
  int filter_passes = 0;
};

// Sampled single-seed variant: draws feasible singletons without replacement
// (seeded, reproducible), runs the density search only on draws that pass the
// value filter, and keeps going until t_counter draws passed or the pool runs
// out. Unlike the exhaustive enumeration, the per-seed ground set is the whole
// pool minus the seed (no value filter).
// Throws DegenerateInstanceError if no feasible singleton exists.
SproutPPResult sproutpp(const Instance& inst, const SproutPPParams& params = {});

}  // namespace submax
