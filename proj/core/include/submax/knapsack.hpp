#pragma once

#include <optional>
#include <span>
#include <vector>

namespace submax {

// Feasibility comparisons allow this much absolute slack per row, so sums of
// normalized costs that should exactly hit the budget do not flap.
inline constexpr double kFeasTol = 1e-9;

// m linear cost rows over the ground set, each with a positive budget.
struct Knapsack {
  std::vector<std::vector<double>> costs;  // [row][element], all >= 0
  std::vector<double> budgets;             // [row], all > 0

  int rows() const { return static_cast<int>(costs.size()); }
  int ground_size() const { return costs.empty() ? 0 : static_cast<int>(costs[0].size()); }

  // Throws ConfigError on ragged rows, negative costs, or non-positive budgets.
  void validate() const;

  double row_cost(int row, std::span<const int> s) const;
  // Sum over rows of costs[row][e].
  double total_cost(int e) const;

  bool is_feasible(std::span<const int> s) const;
  bool singleton_feasible(int e) const;

  // Rescales each row so its budget is exactly 1.
  Knapsack normalized() const;

  // Each budget multiplied by fraction (> 0); used by budget sweeps.
  Knapsack scaled_budgets(double fraction) const;

  // Budgets shrunk by the cost of a, then renormalized to 1:
  // cost'[i][e] = costs[i][e] / (budgets[i] - row_cost(i, a)).
  // Empty if a exhausts some budget (nothing can be added on top of a).
  std::optional<Knapsack> try_reduced_by(std::span<const int> a) const;
  // Same, but throws std::domain_error instead of returning empty.
  Knapsack reduced_by(std::span<const int> a) const;
};

}  // namespace submax
