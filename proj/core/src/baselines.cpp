#include "submax/baselines.hpp"

#include <chrono>
#include <stdexcept>

#include "submax/errors.hpp"

namespace submax {

namespace {

// Sum of binomials C(n, 0..cap), saturating at limit.
long long enumeration_work(int n, int cap, long long limit) {
  long long total = 0;
  double term = 1;
  for (int i = 0; i <= cap; ++i) {
    total += static_cast<long long>(term);
    if (total >= limit) return limit;
    term = term * (n - i) / (i + 1);
    if (term > static_cast<double>(limit)) return limit;
  }
  return total;
}

constexpr long long kBruteForceWorkLimit = 1LL << 26;

struct GreedyOutcome {
  Subset set;
  double value = 0;
};

// Greedy restricted to candidates in `pool`; f supplies (and counts) values.
GreedyOutcome greedy_over(const Instance& inst, const ValueOracle& f,
                          const std::vector<int>& pool) {
  GreedyOutcome out;
  out.value = f.evaluate(out.set);
  std::vector<char> used(inst.n, 0);
  ScratchUnion scratch;
  for (;;) {
    int best_e = -1;
    double best_val = out.value;
    for (int e : pool) {
      if (used[e]) continue;
      auto cand = scratch.make(out.set, e);
      if (!is_feasible(inst, cand)) continue;
      const double val = f.evaluate(cand);
      if (val > best_val) {  // strict: keeps the smallest id on equal gains
        best_val = val;
        best_e = e;
      }
    }
    if (best_e < 0) break;
    out.set = with_element(out.set, best_e);
    out.value = best_val;
    used[best_e] = 1;
  }
  return out;
}

}  // namespace

BruteForceResult brute_force(const Instance& inst, std::optional<int> size_cap) {
  inst.validate();
  const int cap = size_cap.value_or(inst.n);
  if (cap < 0) throw std::invalid_argument("brute_force: size_cap must be >= 0");
  if (enumeration_work(inst.n, std::min(cap, inst.n), kBruteForceWorkLimit) >=
      kBruteForceWorkLimit) {
    throw ResourceError("brute_force: instance too large to enumerate");
  }

  auto f = inst.objective->clone();
  BruteForceResult res;
  Subset cur;
  res.sets_examined = 1;
  res.opt_value = f->evaluate(cur);
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) >= cap) return;
    for (int e = start; e < inst.n; ++e) {
      cur.push_back(e);
      ++res.sets_examined;
      if (is_feasible(inst, cur)) {
        const double val = f->evaluate(cur);
        if (val > res.opt_value) {
          res.opt_value = val;
          res.opt_set = cur;
        }
        self(self, e + 1);
      }
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return res;
}

ResultRecord greedy(const Instance& inst) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  auto f = inst.objective->clone();
  GreedyOutcome out = greedy_over(inst, *f, singleton_feasible_pool(inst));
  ResultRecord rec;
  rec.algo = "greedy";
  rec.set = std::move(out.set);
  rec.value = out.value;
  rec.oracle_calls = f->call_count();
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

ResultRecord repeated_greedy(const Instance& inst, int rounds) {
  inst.validate();
  if (rounds < 1) throw std::invalid_argument("repeated_greedy: rounds must be >= 1");
  const auto t0 = std::chrono::steady_clock::now();
  auto f = inst.objective->clone();
  std::vector<int> pool = singleton_feasible_pool(inst);

  GreedyOutcome best;
  bool have_best = false;
  for (int r = 0; r < rounds && !pool.empty(); ++r) {
    GreedyOutcome round = greedy_over(inst, *f, pool);
    if (!have_best || round.value > best.value) {
      best = round;
      have_best = true;
    }
    if (round.set.empty()) break;  // later rounds would repeat this one
    pool = difference_sorted(pool, round.set);
  }
  if (!have_best) best.value = f->evaluate(best.set);

  ResultRecord rec;
  rec.algo = "rp_greedy";
  rec.set = std::move(best.set);
  rec.value = best.value;
  rec.oracle_calls = f->call_count();
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

ResultRecord density_search_sgs(const Instance& inst, const SproutParams& params) {
  inst.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const SearchParams sp = resolve_sprout_params(params, inst.matroid_count(),
                                                inst.knapsack_count());
  auto f = inst.objective->clone();
  const Subset empty;
  const double f_empty = f->evaluate(empty);
  const std::vector<int> pool = singleton_feasible_pool(inst);

  ResultRecord rec;
  rec.algo = "dssgs";
  rec.set = empty;
  rec.value = f_empty;
  if (!pool.empty()) {
    ContractedObjective z(*f, empty, f_empty);
    const Knapsack normalized = inst.knapsack.normalized();
    const DensitySearchResult ds =
        density_search(*f, z, empty, f_empty, pool, inst.matroids, normalized, sp, 1.0);
    rec.set = ds.best;
    rec.value = ds.best_value;
  }
  rec.oracle_calls = f->call_count();
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

}  // namespace submax
