#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "submax/subset.hpp"

namespace submax {

// Independence oracle. Implementations are immutable and safe to share
// across threads unless noted otherwise.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;
  virtual bool is_independent(std::span<const int> s) const = 0;
};

using MatroidPtr = std::shared_ptr<const MatroidOracle>;

// |S| <= cap.
class UniformMatroid final : public MatroidOracle {
 public:
  explicit UniformMatroid(int cap);
  bool is_independent(std::span<const int> s) const override;
  int cap() const { return cap_; }

 private:
  int cap_;
};

// |S ∩ part_j| <= cap_j for disjoint parts; elements outside every part are
// unconstrained.
class PartitionMatroid final : public MatroidOracle {
 public:
  PartitionMatroid(int n, const std::vector<std::vector<int>>& parts, std::vector<int> caps);
  bool is_independent(std::span<const int> s) const override;

 private:
  std::vector<int> part_of_;  // -1 = free
  std::vector<int> caps_;
};

// Lazy contraction: S independent iff S u A independent in the parent.
// Holds mutable scratch; use from one thread at a time.
class ContractedMatroid final : public MatroidOracle {
 public:
  ContractedMatroid(MatroidPtr parent, Subset a);
  bool is_independent(std::span<const int> s) const override;

 private:
  MatroidPtr parent_;
  Subset a_;
  mutable ScratchUnion scratch_;
};

// Throws std::domain_error if a is not independent in m.
MatroidPtr contract_matroid(MatroidPtr m, Subset a);

// Intersection of k >= 1 matroids; independent iff independent in every member.
class MatroidIntersection {
 public:
  MatroidIntersection() = default;
  explicit MatroidIntersection(std::vector<MatroidPtr> members);

  bool is_independent(std::span<const int> s) const;
  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<MatroidPtr>& members() const { return members_; }

  // Contracts every member by a (no-op wrapper for empty a).
  MatroidIntersection contracted_by(const Subset& a) const;

 private:
  std::vector<MatroidPtr> members_;
};

// Declarative description, used by the instance file format.
struct UniformMatroidSpec {
  int cap = 0;
};
struct PartitionMatroidSpec {
  std::vector<std::vector<int>> parts;
  std::vector<int> caps;
};
using MatroidSpec = std::variant<UniformMatroidSpec, PartitionMatroidSpec>;

// Validates against ground size n (ids in range, parts disjoint, caps match).
// Throws ConfigError on violation.
MatroidPtr build_matroid(const MatroidSpec& spec, int n);

}  // namespace submax
