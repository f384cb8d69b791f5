#include "submax/sgs.hpp"

#include <limits>
#include <stdexcept>

namespace submax {

SgsOutcome knapsack_sgs(const ValueOracle& z, std::span<const int> ground,
                        const MatroidIntersection& matroids, const Knapsack& costs,
                        const SgsParams& params, const SgsTrace& trace) {
  if (params.ell < 1) throw std::invalid_argument("knapsack_sgs: ell must be >= 1");
  if (!(params.eps > 0) || !(params.eps < 1))
    throw std::invalid_argument("knapsack_sgs: eps must lie in (0, 1)");
  if (params.rho < 0) throw std::invalid_argument("knapsack_sgs: rho must be >= 0");

  const int ell = params.ell;
  const int m = costs.rows();
  SgsOutcome out;
  out.candidates.assign(ell, Subset{});
  const long long calls_before = z.call_count();
  if (ground.empty()) return out;

  const int n = static_cast<int>(ground.size());
  ScratchUnion scratch;

  // Singleton pass: values, feasibility, density thresholds.
  std::vector<double> zval(n), dens(n);
  std::vector<char> alive(n, 1);
  double v = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const int e = ground[i];
    const int single[1] = {e};
    zval[i] = z.evaluate(std::span<const int>(single, 1));
    dens[i] = params.rho * costs.total_cost(e);
    const bool matroid_ok = matroids.is_independent(std::span<const int>(single, 1));
    if (!matroid_ok) {
      alive[i] = 0;  // can never satisfy the matroid side of the test
      continue;
    }
    if (costs.singleton_feasible(e) && zval[i] > v) v = zval[i];
  }
  if (!(v > 0)) {
    out.oracle_calls = z.call_count() - calls_before;
    return out;
  }

  // Per-pair upper bounds on the marginal gain, initialized to the singleton
  // value; exact under diminishing returns because candidates only grow.
  std::vector<double> ub(static_cast<size_t>(n) * ell);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < ell; ++c) ub[static_cast<size_t>(i) * ell + c] = zval[i];
    if (alive[i] && zval[i] < dens[i]) alive[i] = 0;  // density test unreachable
  }

  std::vector<double> base_z(ell, 0.0);
  std::vector<std::vector<double>> cost_sum(ell, std::vector<double>(m, 0.0));
  int alive_count = 0;
  for (int i = 0; i < n; ++i) alive_count += alive[i];

  double tau = v;
  const double tau_floor = params.eps * v / n;
  int t = 1;
  while (tau > tau_floor && alive_count > 0) {
    ++out.rounds;
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      const int e = ground[i];
      for (int c = 0; c < ell; ++c) {
        double& bound = ub[static_cast<size_t>(i) * ell + c];
        if (bound < tau || bound < dens[i]) continue;
        if (!matroids.is_independent(scratch.make(out.candidates[c], e))) continue;
        const double znew = z.evaluate(scratch.make(out.candidates[c], e));
        const double gain = znew - base_z[c];
        bound = gain;
        if (gain < tau || gain < dens[i]) continue;
        bool fits = true;
        for (int row = 0; row < m; ++row) {
          if (cost_sum[c][row] + costs.costs[row][e] > 1.0 + kFeasTol) {
            fits = false;
            break;
          }
        }
        if (!fits) {
          out.violated = true;
          continue;
        }
        out.candidates[c] = with_element(out.candidates[c], e);
        base_z[c] = znew;
        for (int row = 0; row < m; ++row) cost_sum[c][row] += costs.costs[row][e];
        alive[i] = 0;
        --alive_count;
        if (trace) trace(SgsStep{t, e, c, gain, tau, dens[i]});
        ++t;
        break;
      }
    }
    tau *= (1.0 - params.eps);
  }

  int best_c = 0;
  for (int c = 1; c < ell; ++c) {
    if (base_z[c] > base_z[best_c]) best_c = c;
  }
  out.best = out.candidates[best_c];
  out.best_z = base_z[best_c];
  out.oracle_calls = z.call_count() - calls_before;
  return out;
}

}  // namespace submax
