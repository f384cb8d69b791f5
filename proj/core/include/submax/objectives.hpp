#pragma once

#include <memory>
#include <span>
#include <vector>

#include "submax/oracle.hpp"

namespace submax {

// Undirected graph with non-negative edge weights, at most one edge per pair,
// no self-loops.
struct WeightedGraph {
  struct Edge {
    int u = 0, v = 0;
    double w = 0;
  };
  int n = 0;
  std::vector<Edge> edges;

  void validate() const;
  // Unweighted degree of each vertex.
  std::vector<int> degrees() const;
};

// Total weight crossing the cut (S, V \ S). Plain edge scan; the oracle below
// uses an adjacency layout instead, so the two act as independent routes.
double weighted_cut(std::span<const int> s, const WeightedGraph& g);

// Dense symmetric similarity with unit diagonal, row-major.
struct SimilarityMatrix {
  int n = 0;
  std::vector<double> s;  // n * n

  double at(int i, int j) const { return s[static_cast<size_t>(i) * n + j]; }
  void validate() const;
};

// s[i][j] = exp(-lambda * ||v_i - v_j||) over Euclidean distance.
SimilarityMatrix similarity_from_features(const std::vector<std::vector<double>>& features,
                                          double lambda);

// f(S) = (sum_{i in N, j in S} s_ij - sum_{i in S, j in S} s_ij) / n.
// Direct double sum; reference route for the oracle.
double diversity_value(std::span<const int> sel, const SimilarityMatrix& sim);

class CutObjective final : public ValueOracle {
 public:
  explicit CutObjective(std::shared_ptr<const WeightedGraph> g);
  int ground_size() const override { return g_->n; }
  std::unique_ptr<ValueOracle> clone() const override;
  const WeightedGraph& graph() const { return *g_; }

 private:
  double value_of(std::span<const int> s) const override;

  std::shared_ptr<const WeightedGraph> g_;
  // CSR adjacency; value is the sum of weights to neighbours outside S, which
  // keeps every term non-negative (so f never dips below zero in rounding).
  std::vector<int> offsets_;
  std::vector<int> nbr_;
  std::vector<double> w_;
};

class DiversityObjective final : public ValueOracle {
 public:
  explicit DiversityObjective(std::shared_ptr<const SimilarityMatrix> sim);
  int ground_size() const override { return sim_->n; }
  std::unique_ptr<ValueOracle> clone() const override;

 private:
  double value_of(std::span<const int> s) const override;

  std::shared_ptr<const SimilarityMatrix> sim_;
  std::vector<double> colsum_;
};

// f(S) = sum of per-element weights (weights >= 0, so f is monotone).
class ModularObjective final : public ValueOracle {
 public:
  explicit ModularObjective(std::vector<double> weights);
  int ground_size() const override { return static_cast<int>(w_.size()); }
  std::unique_ptr<ValueOracle> clone() const override;

 private:
  double value_of(std::span<const int> s) const override;
  std::vector<double> w_;
};

}  // namespace submax
