#pragma once

#include <stdexcept>
#include <string>

namespace submax {

// Bad user input: malformed file, unknown algorithm, invalid parameter combination.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The instance admits no usable candidate (e.g. no feasible singleton).
class DegenerateInstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request was refused because it would exceed a hard work or memory limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace submax
