#include "submax/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "submax/errors.hpp"

namespace submax {

void WeightedGraph::validate() const {
  if (n <= 0) throw ConfigError("graph: n must be > 0");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ConfigError("graph: edge endpoint out of range");
    if (e.u == e.v) throw ConfigError("graph: self-loop on vertex " + std::to_string(e.u));
    if (!(e.w >= 0)) throw ConfigError("graph: edge weights must be >= 0");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw ConfigError("graph: duplicate edge " + std::to_string(key.first) + "-" +
                        std::to_string(key.second));
  }
}

std::vector<int> WeightedGraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const auto& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

double weighted_cut(std::span<const int> s, const WeightedGraph& g) {
  double total = 0;
  for (const auto& e : g.edges) {
    if (contains(s, e.u) != contains(s, e.v)) total += e.w;
  }
  return total;
}

void SimilarityMatrix::validate() const {
  if (n <= 0) throw ConfigError("similarity: n must be > 0");
  if (s.size() != static_cast<size_t>(n) * n) throw ConfigError("similarity: wrong matrix size");
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 1.0) throw ConfigError("similarity: diagonal must be 1");
    for (int j = i; j < n; ++j) {
      if (at(i, j) != at(j, i)) throw ConfigError("similarity: matrix must be symmetric");
      if (!(at(i, j) > 0) || at(i, j) > 1.0)
        throw ConfigError("similarity: entries must lie in (0, 1]");
    }
  }
}

SimilarityMatrix similarity_from_features(const std::vector<std::vector<double>>& features,
                                          double lambda) {
  const int n = static_cast<int>(features.size());
  if (n == 0) throw ConfigError("similarity: no feature rows");
  const size_t dim = features[0].size();
  for (const auto& row : features) {
    if (row.size() != dim) throw ConfigError("similarity: feature rows must have equal length");
  }
  SimilarityMatrix sim;
  sim.n = n;
  sim.s.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    sim.s[static_cast<size_t>(i) * n + i] = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double d2 = 0;
      for (size_t t = 0; t < dim; ++t) {
        const double diff = features[i][t] - features[j][t];
        d2 += diff * diff;
      }
      const double val = std::exp(-lambda * std::sqrt(d2));
      sim.s[static_cast<size_t>(i) * n + j] = val;
      sim.s[static_cast<size_t>(j) * n + i] = val;
    }
  }
  return sim;
}

double diversity_value(std::span<const int> sel, const SimilarityMatrix& sim) {
  double outer = 0, inner = 0;
  for (int j : sel) {
    for (int i = 0; i < sim.n; ++i) outer += sim.at(i, j);
    for (int i : sel) inner += sim.at(i, j);
  }
  return (outer - inner) / sim.n;
}

CutObjective::CutObjective(std::shared_ptr<const WeightedGraph> g) : g_(std::move(g)) {
  g_->validate();
  const int n = g_->n;
  std::vector<int> deg(n, 0);
  for (const auto& e : g_->edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  nbr_.resize(offsets_[n]);
  w_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : g_->edges) {
    nbr_[fill[e.u]] = e.v;
    w_[fill[e.u]++] = e.w;
    nbr_[fill[e.v]] = e.u;
    w_[fill[e.v]++] = e.w;
  }
}

std::unique_ptr<ValueOracle> CutObjective::clone() const {
  return std::make_unique<CutObjective>(g_);
}

double CutObjective::value_of(std::span<const int> s) const {
  double total = 0;
  for (int u : s) {
    for (int t = offsets_[u]; t < offsets_[u + 1]; ++t) {
      if (!contains(s, nbr_[t])) total += w_[t];
    }
  }
  return total;
}

DiversityObjective::DiversityObjective(std::shared_ptr<const SimilarityMatrix> sim)
    : sim_(std::move(sim)) {
  sim_->validate();
  colsum_.assign(sim_->n, 0.0);
  for (int j = 0; j < sim_->n; ++j) {
    double sum = 0;
    for (int i = 0; i < sim_->n; ++i) sum += sim_->at(i, j);
    colsum_[j] = sum;
  }
}

std::unique_ptr<ValueOracle> DiversityObjective::clone() const {
  return std::make_unique<DiversityObjective>(sim_);
}

double DiversityObjective::value_of(std::span<const int> s) const {
  // Per-column form of the definition: each term is colsum_j minus the
  // partial column sum over S, accumulated in the same index order as
  // colsum_ so f(N) lands on exactly zero.
  double total = 0;
  for (int j : s) {
    double part = 0;
    for (int i : s) part += sim_->at(i, j);
    total += colsum_[j] - part;
  }
  return total / sim_->n;
}

ModularObjective::ModularObjective(std::vector<double> weights) : w_(std::move(weights)) {
  for (double w : w_) {
    if (!(w >= 0)) throw ConfigError("modular objective: weights must be >= 0");
  }
}

std::unique_ptr<ValueOracle> ModularObjective::clone() const {
  return std::make_unique<ModularObjective>(w_);
}

double ModularObjective::value_of(std::span<const int> s) const {
  double total = 0;
  for (int e : s) total += w_[e];
  return total;
}

}  // namespace submax
