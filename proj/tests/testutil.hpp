#pragma once

// Shared helpers for the test binaries: independent re-implementations of
// feasibility and optimality used as oracles, a monotone coverage objective,
// and a seeded instance generator.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "submax/instance.hpp"
#include "submax/knapsack.hpp"
#include "submax/matroid.hpp"
#include "submax/objectives.hpp"
#include "submax/oracle.hpp"
#include "submax/rng.hpp"
#include "submax/subset.hpp"

namespace testutil {

inline submax::Subset mask_to_set(unsigned mask, int n) {
  submax::Subset s;
  for (int e = 0; e < n; ++e)
    if (mask & (1u << e)) s.push_back(e);
  return s;
}

template <typename Fn>
void for_each_subset(int n, Fn&& fn) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) fn(mask_to_set(mask, n));
}

// Feasibility recomputed from the definition: independent in every matroid
// member and within every knapsack budget, summed by hand.
inline bool feasible_by_definition(const submax::Instance& inst, std::span<const int> s) {
  for (const auto& m : inst.matroids.members())
    if (!m->is_independent(s)) return false;
  for (int row = 0; row < inst.knapsack.rows(); ++row) {
    double total = 0;
    for (int e : s) total += inst.knapsack.costs[row][e];
    if (total > inst.knapsack.budgets[row] + submax::kFeasTol) return false;
  }
  return true;
}

struct RefOpt {
  submax::Subset set;
  double value = 0;
};

// Exhaustive bitmask scan, deliberately not sharing code with brute_force.
inline RefOpt reference_opt(const submax::Instance& inst) {
  if (inst.n > 22) throw std::invalid_argument("reference_opt: instance too large");
  auto f = inst.objective->clone();
  RefOpt best;
  best.value = f->evaluate({});
  for (unsigned mask = 1; mask < (1u << inst.n); ++mask) {
    const submax::Subset s = mask_to_set(mask, inst.n);
    if (!feasible_by_definition(inst, s)) continue;
    const double val = f->evaluate(s);
    if (val > best.value) {
      best.value = val;
      best.set = s;
    }
  }
  return best;
}

// Every subset value of f, indexed by bitmask. n <= 20 or so.
inline std::vector<double> all_values(const submax::ValueOracle& f, int n) {
  std::vector<double> val(std::size_t{1} << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) val[mask] = f.evaluate(mask_to_set(mask, n));
  return val;
}

// Diminishing returns over every (S ⊆ T, e ∉ T) triple.
inline bool check_submodular(const std::vector<double>& val, int n, double tol = 1e-9) {
  for (unsigned t = 0; t < (1u << n); ++t) {
    unsigned s = t;
    for (;;) {
      for (int e = 0; e < n; ++e) {
        const unsigned bit = 1u << e;
        if (t & bit) continue;
        if (val[s | bit] - val[s] < val[t | bit] - val[t] - tol) return false;
      }
      if (s == 0) break;
      s = (s - 1) & t;
    }
  }
  return true;
}

inline bool check_monotone(const std::vector<double>& val, int n, double tol = 1e-9) {
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    for (int e = 0; e < n; ++e) {
      const unsigned bit = 1u << e;
      if (mask & bit) continue;
      if (val[mask | bit] < val[mask] - tol) return false;
    }
  return true;
}

inline bool check_nonnegative(const std::vector<double>& val, double tol = 1e-9) {
  return std::all_of(val.begin(), val.end(), [tol](double v) { return v >= -tol; });
}

// Monotone weighted-coverage objective: element e covers item set covers[e],
// f(S) = total weight of the union of covered items.
class CoverageObjective final : public submax::ValueOracle {
 public:
  CoverageObjective(int n, std::vector<std::vector<int>> covers, std::vector<double> item_weights)
      : n_(n), covers_(std::move(covers)), item_w_(std::move(item_weights)) {
    if (static_cast<int>(covers_.size()) != n_)
      throw std::invalid_argument("coverage: covers size");
  }

  int ground_size() const override { return n_; }
  std::unique_ptr<submax::ValueOracle> clone() const override {
    return std::unique_ptr<submax::ValueOracle>(new CoverageObjective(*this));
  }

 private:
  double value_of(std::span<const int> s) const override {
    std::vector<char> hit(item_w_.size(), 0);
    double total = 0;
    for (int e : s)
      for (int item : covers_[e])
        if (!hit[item]) {
          hit[item] = 1;
          total += item_w_[item];
        }
    return total;
  }

  int n_;
  std::vector<std::vector<int>> covers_;
  std::vector<double> item_w_;
};

enum class ObjKind { kCut, kDiversity, kCoverage };

// Seeded random instance with every singleton feasible: k matroids (uniform,
// plus a partition when k = 2), m knapsack rows with costs in [0.05, 0.95].
inline submax::Instance random_instance(int n, int k, int m, ObjKind kind, std::uint64_t seed) {
  using namespace submax;
  RngStream rng(seed, 17);
  Instance inst;
  inst.n = n;

  switch (kind) {
    case ObjKind::kCut: {
      WeightedGraph g;
      g.n = n;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng.next_unit() < 0.5) g.edges.push_back({u, v, 0.1 + 0.9 * rng.next_unit()});
      inst.objective = std::make_shared<CutObjective>(std::make_shared<WeightedGraph>(std::move(g)));
      break;
    }
    case ObjKind::kDiversity: {
      std::vector<std::vector<double>> feats(n);
      for (auto& row : feats) row = {rng.next_unit(), rng.next_unit()};
      inst.objective = std::make_shared<DiversityObjective>(
          std::make_shared<SimilarityMatrix>(similarity_from_features(feats, 1.0)));
      break;
    }
    case ObjKind::kCoverage: {
      const int items = 2 * n;
      std::vector<double> weights(items);
      for (auto& w : weights) w = 0.1 + rng.next_unit();
      std::vector<std::vector<int>> covers(n);
      for (auto& cov : covers) {
        const int c = 1 + static_cast<int>(rng.next_below(4));
        for (int t = 0; t < c; ++t) cov.push_back(static_cast<int>(rng.next_below(items)));
        std::sort(cov.begin(), cov.end());
        cov.erase(std::unique(cov.begin(), cov.end()), cov.end());
      }
      inst.objective = std::make_shared<CoverageObjective>(n, std::move(covers), std::move(weights));
      break;
    }
  }

  std::vector<MatroidPtr> members;
  members.push_back(std::make_shared<UniformMatroid>(2 + static_cast<int>(rng.next_below(3))));
  if (k >= 2) {
    std::vector<std::vector<int>> parts(2);
    for (int e = 0; e < n; ++e) parts[rng.next_below(2)].push_back(e);
    std::vector<int> caps = {1 + static_cast<int>(rng.next_below(2)),
                             1 + static_cast<int>(rng.next_below(2))};
    members.push_back(std::make_shared<PartitionMatroid>(n, parts, caps));
  }
  inst.matroids = MatroidIntersection(std::move(members));

  for (int row = 0; row < m; ++row) {
    std::vector<double> costs(n);
    for (auto& c : costs) c = 0.05 + 0.9 * rng.next_unit();
    inst.knapsack.costs.push_back(std::move(costs));
    inst.knapsack.budgets.push_back(1.0);
  }
  inst.validate();
  return inst;
}

// Plain integer bisection on [lo, hi]: probe b = floor((lo + hi + 1) / 2);
// raises_low(b) pulls the lower endpoint up to b, otherwise the upper comes
// down to b. Returns the probes in order. The reference the damped search
// must match exactly at mu = 1.
inline std::vector<int> bisection_probes(int lo, int hi,
                                         const std::function<bool(int)>& raises_low) {
  std::vector<int> probes;
  while (hi - lo > 1) {
    const int b = (lo + hi + 1) / 2;
    probes.push_back(b);
    if (raises_low(b)) lo = b;
    else hi = b;
  }
  return probes;
}

}  // namespace testutil
