#pragma once

#include <span>
#include <string>
#include <vector>

namespace submax {

// Ground-set elements are 0-based integer ids. A Subset is kept sorted
// ascending with no duplicates; every function here preserves that.
using Subset = std::vector<int>;

bool contains(std::span<const int> s, int e);
bool is_sorted_unique(std::span<const int> s);

// S u {e}; returns a copy of s if e is already present.
Subset with_element(std::span<const int> s, int e);
Subset union_sorted(std::span<const int> a, std::span<const int> b);
Subset difference_sorted(std::span<const int> a, std::span<const int> b);

// "1 4 9" with a configurable separator; empty string for the empty set.
std::string ids_to_string(std::span<const int> s, char sep = ' ');

// Builds S u {e} into a reused buffer so hot loops avoid re-allocating.
class ScratchUnion {
 public:
  std::span<const int> make(std::span<const int> s, int e);
  std::span<const int> make(std::span<const int> s, std::span<const int> t);

 private:
  std::vector<int> buf_;
};

}  // namespace submax
