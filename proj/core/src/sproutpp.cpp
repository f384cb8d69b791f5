#include "submax/sproutpp.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "submax/errors.hpp"
#include "submax/parallel.hpp"
#include "submax/rng.hpp"

namespace submax {

double smooth_update(int b, bool violated, double endpoint, double mu) {
  if (!(mu >= 1.0)) throw std::invalid_argument("smooth_update: mu must be >= 1");
  const double sign = violated ? -1.0 : 1.0;
  return b + sign * (1.0 - 1.0 / mu) * std::fabs(endpoint - b);
}

double alpha_bound(int p, int m, double eps) {
  if (p < 1 || m < 1) throw std::invalid_argument("alpha_bound: need p >= 1 and m >= 1");
  if (!(eps >= 0) || !(eps < 1)) throw std::invalid_argument("alpha_bound: eps must lie in [0, 1)");
  const double one = 1.0 - eps;
  return one * (p + 1 - one * one) / (eps * (p + 1) + m * one);
}

double success_probability(double r, int n, int t_c) {
  if (!(r >= 0) || n < 1 || t_c < 0)
    throw std::invalid_argument("success_probability: bad arguments");
  return 1.0 - std::exp(-r * static_cast<double>(t_c) / n);
}

std::pair<int, double> best_single(const Instance& inst) {
  inst.validate();
  const std::vector<int> pool = singleton_feasible_pool(inst);
  if (pool.empty()) throw DegenerateInstanceError("best_single: no feasible singleton");
  auto f = inst.objective->clone();
  int best = pool[0];
  double best_val = -1;
  for (int e : pool) {
    const int single[1] = {e};
    const double val = f->evaluate(std::span<const int>(single, 1));
    if (val > best_val) {
      best = e;
      best_val = val;
    }
  }
  return {best, best_val};
}

std::vector<int> assumption_violations(const Instance& inst, const Subset& s_opt, double alpha) {
  const auto [star, star_val] = best_single(inst);
  (void)star;
  auto f = inst.objective->clone();
  std::vector<int> out;
  for (int a : s_opt) {
    const int single[1] = {a};
    if ((1.0 + alpha) * f->evaluate(std::span<const int>(single, 1)) < star_val) out.push_back(a);
  }
  return out;
}

SproutPPResult sproutpp(const Instance& inst, const SproutPPParams& params) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  if (!(params.alpha >= 0)) throw std::invalid_argument("sproutpp: alpha must be >= 0");
  if (!(params.mu >= 1.0)) throw std::invalid_argument("sproutpp: mu must be >= 1");
  const int t_target = params.t_counter.value_or((inst.n + 4) / 5);
  if (t_target < 1) throw std::invalid_argument("sproutpp: t_counter must be >= 1");

  SproutParams base;
  base.c_enum = 1;
  base.eps = params.eps;
  base.delta = params.delta.value_or(params.eps);
  base.ell = params.ell;
  base.beta = params.beta;
  base.gamma = params.gamma;
  const SearchParams sp = resolve_sprout_params(base, inst.matroid_count(),
                                                inst.knapsack_count());

  const std::vector<int> pool = singleton_feasible_pool(inst);
  if (pool.empty()) throw DegenerateInstanceError("sproutpp: no feasible singleton");

  auto root = inst.objective->clone();
  // Singleton values feed the filter and double as cached seed values.
  std::vector<double> fval(pool.size());
  double star_val = -1;
  for (size_t i = 0; i < pool.size(); ++i) {
    const int single[1] = {pool[i]};
    fval[i] = root->evaluate(std::span<const int>(single, 1));
    if (fval[i] > star_val) star_val = fval[i];
  }

  // Draw without replacement until enough samples pass the value filter or
  // the pool is exhausted. Failing draws cost nothing beyond the cached
  // singleton value, so they do not tick the counter.
  SproutPPResult out;
  RngStream rng(params.seed, 0);
  std::vector<size_t> remaining(pool.size());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::vector<size_t> samples;
  const double cutoff = (1.0 - params.alpha) * star_val;
  while (out.filter_passes < t_target && !remaining.empty()) {
    const size_t slot = rng.next_below(remaining.size());
    const size_t idx = remaining[slot];
    remaining.erase(remaining.begin() + slot);
    out.visited.push_back(pool[idx]);
    if (fval[idx] >= cutoff) {
      samples.push_back(idx);
      ++out.filter_passes;
    }
  }

  struct TaskResult {
    Subset set;
    double value = 0;
    long long calls = 0;
  };
  std::vector<TaskResult> results(samples.size());

  parallel_for(params.jobs, static_cast<int>(samples.size()), [&](int i) {
    auto f = inst.objective->clone();
    const int a_elem = pool[samples[i]];
    const Subset a{a_elem};
    const double f_a = fval[samples[i]];
    TaskResult task;
    task.set = a;
    task.value = f_a;

    if (auto reduced = inst.knapsack.try_reduced_by(a)) {
      ContractedObjective z(*f, a, f_a);
      std::vector<int> ground;
      ground.reserve(pool.size() - 1);
      for (int e : pool) {
        if (e != a_elem) ground.push_back(e);
      }
      if (!ground.empty()) {
        const MatroidIntersection contracted = inst.matroids.contracted_by(a);
        const DensitySearchResult ds =
            density_search(*f, z, a, f_a, ground, contracted, *reduced, sp, params.mu);
        if (ds.best_value > task.value) {
          task.set = ds.best;
          task.value = ds.best_value;
        }
      }
    }
    task.calls = f->call_count();
    results[i] = std::move(task);
  });

  long long total_calls = root->call_count();
  size_t winner = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    total_calls += results[i].calls;
    if (results[i].value > results[winner].value) winner = i;
  }

  // The best singleton always passes its own filter, so at least one sample
  // was processed.
  ResultRecord& rec = out.record;
  rec.algo = "sproutpp";
  rec.seed = params.seed;
  rec.set = results[winner].set;
  rec.value = results[winner].value;
  rec.oracle_calls = total_calls;
  rec.visited = static_cast<int>(out.visited.size());
  rec.filter_passes = out.filter_passes;
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace submax
