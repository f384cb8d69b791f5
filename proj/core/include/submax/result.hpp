#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "submax/subset.hpp"

namespace submax {

// What every solver hands back. wall_ms is measured in memory; serializers
// write it as 0 unless timing output is explicitly requested, so seeded runs
// stay byte-identical.
struct ResultRecord {
  std::string algo;
  Subset set;
  double value = 0;
  long long oracle_calls = 0;
  double wall_ms = 0;
  std::optional<std::uint64_t> seed;

  // Sampling diagnostics (set by sproutpp only).
  std::optional<int> visited;
  std::optional<int> filter_passes;
};

}  // namespace submax
