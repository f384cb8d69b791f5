#include "submax/matroid.hpp"

#include <stdexcept>
#include <string>

#include "submax/errors.hpp"

namespace submax {

UniformMatroid::UniformMatroid(int cap) : cap_(cap) {
  if (cap < 0) throw ConfigError("uniform matroid: cap must be >= 0");
}

bool UniformMatroid::is_independent(std::span<const int> s) const {
  return static_cast<int>(s.size()) <= cap_;
}

PartitionMatroid::PartitionMatroid(int n, const std::vector<std::vector<int>>& parts,
                                   std::vector<int> caps)
    : part_of_(n, -1), caps_(std::move(caps)) {
  if (parts.size() != caps_.size())
    throw ConfigError("partition matroid: parts and caps must have equal length");
  for (size_t j = 0; j < parts.size(); ++j) {
    if (caps_[j] < 0) throw ConfigError("partition matroid: caps must be >= 0");
    for (int e : parts[j]) {
      if (e < 0 || e >= n)
        throw ConfigError("partition matroid: element id " + std::to_string(e) + " out of range");
      if (part_of_[e] != -1)
        throw ConfigError("partition matroid: element " + std::to_string(e) +
                          " appears in two parts");
      part_of_[e] = static_cast<int>(j);
    }
  }
}

bool PartitionMatroid::is_independent(std::span<const int> s) const {
  // Counts by pairwise scan: |S| is small in practice and this keeps the
  // oracle state-free, hence shareable across threads.
  for (size_t i = 0; i < s.size(); ++i) {
    int p = part_of_[s[i]];
    if (p < 0) continue;
    int cnt = 1;
    for (size_t j = 0; j < s.size(); ++j) {
      if (j != i && part_of_[s[j]] == p) ++cnt;
    }
    if (cnt > caps_[p]) return false;
  }
  return true;
}

ContractedMatroid::ContractedMatroid(MatroidPtr parent, Subset a)
    : parent_(std::move(parent)), a_(std::move(a)) {}

bool ContractedMatroid::is_independent(std::span<const int> s) const {
  return parent_->is_independent(scratch_.make(s, a_));
}

MatroidPtr contract_matroid(MatroidPtr m, Subset a) {
  if (!m) throw std::domain_error("contract_matroid: null matroid");
  if (a.empty()) return m;
  if (!m->is_independent(a))
    throw std::domain_error("contract_matroid: contraction set is not independent");
  return std::make_shared<ContractedMatroid>(std::move(m), std::move(a));
}

MatroidIntersection::MatroidIntersection(std::vector<MatroidPtr> members)
    : members_(std::move(members)) {
  for (const auto& m : members_) {
    if (!m) throw ConfigError("matroid intersection: null member");
  }
}

bool MatroidIntersection::is_independent(std::span<const int> s) const {
  for (const auto& m : members_) {
    if (!m->is_independent(s)) return false;
  }
  return true;
}

MatroidIntersection MatroidIntersection::contracted_by(const Subset& a) const {
  if (a.empty()) return *this;
  std::vector<MatroidPtr> out;
  out.reserve(members_.size());
  for (const auto& m : members_) out.push_back(contract_matroid(m, a));
  return MatroidIntersection(std::move(out));
}

MatroidPtr build_matroid(const MatroidSpec& spec, int n) {
  if (std::holds_alternative<UniformMatroidSpec>(spec)) {
    return std::make_shared<UniformMatroid>(std::get<UniformMatroidSpec>(spec).cap);
  }
  const auto& p = std::get<PartitionMatroidSpec>(spec);
  return std::make_shared<PartitionMatroid>(n, p.parts, p.caps);
}

}  // namespace submax
