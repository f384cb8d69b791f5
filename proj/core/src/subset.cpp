#include "submax/subset.hpp"

#include <algorithm>
#include <charconv>

namespace submax {

bool contains(std::span<const int> s, int e) {
  return std::binary_search(s.begin(), s.end(), e);
}

bool is_sorted_unique(std::span<const int> s) {
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] >= s[i]) return false;
  }
  return true;
}

Subset with_element(std::span<const int> s, int e) {
  Subset out(s.begin(), s.end());
  auto it = std::lower_bound(out.begin(), out.end(), e);
  if (it == out.end() || *it != e) out.insert(it, e);
  return out;
}

Subset union_sorted(std::span<const int> a, std::span<const int> b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset difference_sorted(std::span<const int> a, std::span<const int> b) {
  Subset out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string ids_to_string(std::span<const int> s, char sep) {
  std::string out;
  char buf[16];
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out.push_back(sep);
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, s[i]);
    out.append(buf, p);
  }
  return out;
}

std::span<const int> ScratchUnion::make(std::span<const int> s, int e) {
  buf_.clear();
  buf_.reserve(s.size() + 1);
  auto it = s.begin();
  for (; it != s.end() && *it < e; ++it) buf_.push_back(*it);
  buf_.push_back(e);
  if (it != s.end() && *it == e) ++it;
  buf_.insert(buf_.end(), it, s.end());
  return buf_;
}

std::span<const int> ScratchUnion::make(std::span<const int> s, std::span<const int> t) {
  buf_.clear();
  buf_.reserve(s.size() + t.size());
  std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(buf_));
  return buf_;
}

}  // namespace submax
