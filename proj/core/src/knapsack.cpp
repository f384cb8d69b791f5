#include "submax/knapsack.hpp"

#include <stdexcept>
#include <string>

#include "submax/errors.hpp"

namespace submax {

void Knapsack::validate() const {
  if (costs.size() != budgets.size())
    throw ConfigError("knapsack: costs and budgets must have equal length");
  const size_t n = costs.empty() ? 0 : costs[0].size();
  for (size_t i = 0; i < costs.size(); ++i) {
    if (costs[i].size() != n) throw ConfigError("knapsack: cost rows must have equal length");
    for (double c : costs[i]) {
      if (!(c >= 0)) throw ConfigError("knapsack: costs must be >= 0");
    }
    if (!(budgets[i] > 0)) throw ConfigError("knapsack: budgets must be > 0");
  }
}

double Knapsack::row_cost(int row, std::span<const int> s) const {
  const auto& c = costs[row];
  double sum = 0;
  for (int e : s) sum += c[e];
  return sum;
}

double Knapsack::total_cost(int e) const {
  double sum = 0;
  for (const auto& c : costs) sum += c[e];
  return sum;
}

bool Knapsack::is_feasible(std::span<const int> s) const {
  for (int i = 0; i < rows(); ++i) {
    if (row_cost(i, s) > budgets[i] + kFeasTol) return false;
  }
  return true;
}

bool Knapsack::singleton_feasible(int e) const {
  for (int i = 0; i < rows(); ++i) {
    if (costs[i][e] > budgets[i] + kFeasTol) return false;
  }
  return true;
}

Knapsack Knapsack::normalized() const {
  Knapsack out;
  out.costs.resize(costs.size());
  out.budgets.assign(budgets.size(), 1.0);
  for (size_t i = 0; i < costs.size(); ++i) {
    out.costs[i].reserve(costs[i].size());
    for (double c : costs[i]) out.costs[i].push_back(c / budgets[i]);
  }
  return out;
}

Knapsack Knapsack::scaled_budgets(double fraction) const {
  if (!(fraction > 0)) throw ConfigError("knapsack: budget fraction must be > 0");
  Knapsack out = *this;
  for (double& b : out.budgets) b *= fraction;
  return out;
}

std::optional<Knapsack> Knapsack::try_reduced_by(std::span<const int> a) const {
  Knapsack out;
  out.costs.resize(costs.size());
  out.budgets.assign(budgets.size(), 1.0);
  for (int i = 0; i < rows(); ++i) {
    const double remaining = budgets[i] - row_cost(i, a);
    if (!(remaining > 0)) return std::nullopt;
    out.costs[i].reserve(costs[i].size());
    for (double c : costs[i]) out.costs[i].push_back(c / remaining);
  }
  return out;
}

Knapsack Knapsack::reduced_by(std::span<const int> a) const {
  auto out = try_reduced_by(a);
  if (!out) throw std::domain_error("knapsack reduction: set exhausts a budget");
  return *std::move(out);
}

}  // namespace submax
