#include "submax/sprout.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "submax/errors.hpp"
#include "submax/parallel.hpp"
#include "submax/sproutpp.hpp"

namespace submax {

TheoryParams theory_params(int k, int m, double eps) {
  if (k < 1 || m < 1) throw std::invalid_argument("theory_params: need k >= 1 and m >= 1");
  TheoryParams th;
  th.p_cap = std::max(static_cast<int>(std::ceil(std::sqrt(1.0 + m))), k);
  th.ell = th.p_cap + 1;
  th.p = std::max(th.ell - 1, k);
  if (!(eps > 0) || !(eps < 1.0 - 1.0 / th.ell))
    throw std::invalid_argument("theory_params: eps must lie in (0, 1 - 1/ell)");
  const double denom = th.p + 1 + m * (1.0 - eps);
  th.beta = (1.0 - eps) * (1.0 - 1.0 / th.ell - eps) / denom;
  th.gamma = (th.p + 1) / denom;
  return th;
}

double density_ratio(double beta, double v_max, double delta, int b, double gamma, double f_seed,
                     int c_enum) {
  if (!(v_max > 0)) throw std::invalid_argument("density_ratio: v_max must be > 0");
  if (c_enum < 1) throw std::invalid_argument("density_ratio: c_enum must be >= 1");
  return beta * v_max * std::pow(1.0 + delta, b) + gamma * f_seed / c_enum;
}

double ideal_density_ratio(int p, int m, int ell, double eps, double z_opt, double f_seed,
                           int c_enum) {
  const double denom = p + 1 + m * (1.0 - eps);
  return ((1.0 - eps) * (1.0 - 1.0 / ell - eps) * z_opt + (p + 1) * f_seed / c_enum) / denom;
}

Subset reduced_ground_set(const ValueOracle& f, const Subset& a, int c_enum) {
  std::vector<int> pool;
  pool.reserve(f.ground_size());
  for (int e = 0; e < f.ground_size(); ++e) {
    if (!contains(a, e)) pool.push_back(e);
  }
  return reduced_ground_set(f, a, f.evaluate(a), c_enum, pool);
}

Subset reduced_ground_set(const ValueOracle& f, const Subset& a, double f_a, int c_enum,
                          std::span<const int> pool) {
  Subset out;
  ScratchUnion scratch;
  for (int e : pool) {
    if (contains(a, e)) continue;
    const double z = f.evaluate(scratch.make(a, e)) - f_a;
    if (c_enum * z <= f_a) out.push_back(e);
  }
  return out;
}

DensitySearchResult density_search(const ValueOracle& f, const ValueOracle& z,
                                   const Subset& seed, double f_seed,
                                   std::span<const int> ground,
                                   const MatroidIntersection& matroids, const Knapsack& costs,
                                   const SearchParams& sp, double mu,
                                   std::span<const double> singleton_z, const SgsTrace& trace) {
  if (!(mu >= 1.0)) throw std::invalid_argument("density_search: mu must be >= 1");
  if (!singleton_z.empty() && singleton_z.size() != ground.size())
    throw std::invalid_argument("density_search: singleton_z size mismatch");

  DensitySearchResult res;
  res.best = seed;
  res.best_value = f_seed;
  res.b_low = 1;
  res.b_high = 0;
  if (ground.empty()) return res;

  // The exponent grid only matters when some feasible singleton has positive
  // shifted value; otherwise every probe would return empty candidates.
  double v = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < ground.size(); ++i) {
    const int single[1] = {ground[i]};
    const std::span<const int> s(single, 1);
    const double zi = singleton_z.empty() ? z.evaluate(s) : singleton_z[i];
    if (matroids.is_independent(s) && costs.singleton_feasible(ground[i]) && zi > v) v = zi;
  }
  if (!(v > 0)) return res;

  double b_low = 1;
  double b_high = std::ceil(std::log(static_cast<double>(ground.size())) / sp.delta);
  // The damped update contracts the bracket by at least (2mu - 1) / (2mu) per
  // step but can approach length 1 without reaching it, so iterations are
  // capped at twice the geometric convergence bound. Plain bisection (mu = 1)
  // finishes well inside the cap.
  const double len0 = std::max(2.0, b_high - b_low);
  const int max_iters =
      2 * static_cast<int>(std::ceil(std::log(len0) / std::log(2.0 * mu / (2.0 * mu - 1.0)))) + 8;

  std::map<int, bool> seen;
  int iters = 0;
  while (std::fabs(b_high - b_low) > 1.0 && iters < max_iters) {
    ++iters;
    const int b = static_cast<int>(std::floor((b_low + b_high + 1.0) / 2.0));
    bool violated;
    auto it = seen.find(b);
    if (it != seen.end()) {
      violated = it->second;
    } else {
      const double rho = density_ratio(sp.beta, v, sp.delta, b, sp.gamma, f_seed, sp.c_enum);
      SgsOutcome sgs = knapsack_sgs(z, ground, matroids, costs,
                                    SgsParams{sp.ell, rho, sp.eps}, trace);
      violated = sgs.violated;
      DensityProbe probe;
      probe.b = b;
      probe.rho = rho;
      probe.violated = violated;
      probe.solution = union_sorted(seed, sgs.best);
      probe.value = f.evaluate(probe.solution);
      if (probe.value > res.best_value) {
        res.best = probe.solution;
        res.best_value = probe.value;
      }
      res.probes.push_back(std::move(probe));
      seen.emplace(b, violated);
    }
    if (violated) {
      b_low = smooth_update(b, true, b_low, mu);
    } else {
      b_high = smooth_update(b, false, b_high, mu);
    }
  }
  res.b_low = b_low;
  res.b_high = b_high;
  return res;
}

SearchParams resolve_sprout_params(const SproutParams& p, int k, int m) {
  if (p.c_enum < 1) throw std::invalid_argument("sprout: c_enum must be >= 1");
  if (!(p.eps > 0) || !(p.eps < 1)) throw std::invalid_argument("sprout: eps must lie in (0, 1)");
  SearchParams sp;
  sp.c_enum = p.c_enum;
  sp.eps = p.eps;
  sp.delta = p.delta.value_or(p.eps);
  if (!(sp.delta > 0)) throw std::invalid_argument("sprout: delta must be > 0");
  if (p.ell && p.beta && p.gamma) {
    sp.ell = *p.ell;
    sp.beta = *p.beta;
    sp.gamma = *p.gamma;
  } else {
    const TheoryParams th = theory_params(k, m, p.eps);
    sp.ell = p.ell.value_or(th.ell);
    sp.beta = p.beta.value_or(th.beta);
    sp.gamma = p.gamma.value_or(th.gamma);
  }
  if (sp.ell < 1) throw std::invalid_argument("sprout: ell must be >= 1");
  if (sp.beta < 0 || sp.gamma < 0)
    throw std::invalid_argument("sprout: beta and gamma must be >= 0");
  return sp;
}

namespace {

// All feasible subsets of `pool` with exactly `want` elements, in
// lexicographic order. Feasibility is downward closed, so pruning infeasible
// prefixes loses nothing.
void enumerate_seeds(const Instance& inst, const std::vector<int>& pool, int want,
                     std::vector<Subset>& out) {
  Subset cur;
  cur.reserve(want);
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) == want) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      if (is_feasible(inst, cur)) self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

// Fallback when no feasible seed of the requested size exists: best feasible
// set strictly smaller, the empty set included.
ResultRecord best_small_set(const Instance& inst, const std::vector<int>& pool, int below) {
  auto f = inst.objective->clone();
  Subset cur, best_set;
  double best = f->evaluate(cur);
  auto rec = [&](auto&& self, size_t start) -> void {
    if (static_cast<int>(cur.size()) >= below - 1) return;
    for (size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      if (is_feasible(inst, cur)) {
        const double val = f->evaluate(cur);
        if (val > best) {
          best = val;
          best_set = cur;
        }
        self(self, i + 1);
      }
      cur.pop_back();
    }
  };
  if (below > 0) rec(rec, 0);
  ResultRecord rec_out;
  rec_out.algo = "sprout";
  rec_out.set = best_set;
  rec_out.value = best;
  rec_out.oracle_calls = f->call_count();
  return rec_out;
}

}  // namespace

ResultRecord sprout(const Instance& inst, const SproutParams& params) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const SearchParams sp = resolve_sprout_params(params, inst.matroid_count(),
                                                inst.knapsack_count());
  const std::vector<int> pool = singleton_feasible_pool(inst);

  std::vector<Subset> seeds;
  enumerate_seeds(inst, pool, sp.c_enum, seeds);
  if (seeds.empty()) {
    ResultRecord rec = best_small_set(inst, pool, sp.c_enum);
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return rec;
  }

  struct TaskResult {
    Subset set;
    double value = 0;
    long long calls = 0;
  };
  std::vector<TaskResult> results(seeds.size());

  parallel_for(params.jobs, static_cast<int>(seeds.size()), [&](int i) {
    auto f = inst.objective->clone();
    const Subset& a = seeds[i];
    const double f_a = f->evaluate(a);
    TaskResult task;
    task.set = a;
    task.value = f_a;

    if (auto reduced = inst.knapsack.try_reduced_by(a)) {
      ContractedObjective z(*f, a, f_a);
      std::vector<int> nprime;
      std::vector<double> zsing;
      ScratchUnion scratch;
      for (int e : pool) {
        if (contains(a, e)) continue;
        const double ze = f->evaluate(scratch.make(a, e)) - f_a;
        if (sp.c_enum * ze <= f_a) {
          nprime.push_back(e);
          zsing.push_back(ze);
        }
      }
      if (!nprime.empty()) {
        const MatroidIntersection contracted = inst.matroids.contracted_by(a);
        const DensitySearchResult ds =
            density_search(*f, z, a, f_a, nprime, contracted, *reduced, sp, 1.0, zsing);
        if (ds.best_value > task.value) {
          task.set = ds.best;
          task.value = ds.best_value;
        }
      }
    }
    task.calls = f->call_count();
    results[i] = std::move(task);
  });

  size_t winner = 0;
  long long total_calls = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    total_calls += results[i].calls;
    if (results[i].value > results[winner].value) winner = i;
  }

  ResultRecord rec;
  rec.algo = "sprout";
  rec.set = results[winner].set;
  rec.value = results[winner].value;
  rec.oracle_calls = total_calls;
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

ApproxBound approx_bound(int k, int m, double eps, int c_enum, double r) {
  if (k < 1 || m < 1) throw std::invalid_argument("approx_bound: need k >= 1 and m >= 1");
  if (!(eps >= 0) || !(eps < 1)) throw std::invalid_argument("approx_bound: eps must lie in [0, 1)");
  if (c_enum < 1) throw std::invalid_argument("approx_bound: c_enum must be >= 1");
  if (!(r > 0)) throw std::invalid_argument("approx_bound: r must be > 0");
  const int p_cap = std::max(static_cast<int>(std::ceil(std::sqrt(1.0 + m))), k);
  const double c = c_enum;
  const double one = 1.0 - eps;
  ApproxBound out;
  out.coefficient =
      one * one * (1.0 - 2.0 * eps) / (k + m + 3 + 2.0 * std::sqrt(m + 1.0)) +
      ((c - eps) * (p_cap + 1) + (c - 1.0) * m * one - c * one * one * one) /
          (r * (p_cap + 1 + m * one));
  out.ratio = 1.0 / out.coefficient;
  return out;
}

}  // namespace submax
