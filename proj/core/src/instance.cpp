#include "submax/instance.hpp"

#include "submax/errors.hpp"

namespace submax {

void Instance::validate() const {
  if (n <= 0) throw ConfigError("instance: n must be > 0");
  if (!objective) throw ConfigError("instance: missing objective");
  if (objective->ground_size() != n) throw ConfigError("instance: objective ground size != n");
  if (matroids.size() < 1) throw ConfigError("instance: need at least one matroid");
  knapsack.validate();
  if (knapsack.rows() < 1) throw ConfigError("instance: need at least one knapsack row");
  if (knapsack.ground_size() != n) throw ConfigError("instance: knapsack ground size != n");
}

bool is_feasible(const Instance& inst, std::span<const int> s) {
  return inst.matroids.is_independent(s) && inst.knapsack.is_feasible(s);
}

std::vector<int> singleton_feasible_pool(const Instance& inst) {
  std::vector<int> pool;
  pool.reserve(inst.n);
  int e_arr[1];
  for (int e = 0; e < inst.n; ++e) {
    e_arr[0] = e;
    std::span<const int> s(e_arr, 1);
    if (inst.matroids.is_independent(s) && inst.knapsack.singleton_feasible(e)) pool.push_back(e);
  }
  return pool;
}

}  // namespace submax
