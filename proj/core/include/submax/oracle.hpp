#pragma once

#include <memory>
#include <span>
#include <vector>

#include "submax/subset.hpp"

namespace submax {

// Deterministic non-negative set function. evaluate() bumps the call counter
// by exactly one; that counter is the cost unit every algorithm reports.
//
// Concrete objectives keep their payload immutable and shareable, so clone()
// is cheap: it hands out a fresh counter over the same function. Parallel
// workers each clone, count privately, and the caller sums at the join.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  double evaluate(std::span<const int> s) const {
    ++calls_;
    return value_of(s);
  }

  long long call_count() const { return calls_; }
  virtual int ground_size() const = 0;
  virtual std::unique_ptr<ValueOracle> clone() const = 0;

 protected:
  ValueOracle() = default;
  ValueOracle(const ValueOracle&) {}  // a copy starts with a zero counter
  ValueOracle& operator=(const ValueOracle&) = delete;

 private:
  virtual double value_of(std::span<const int> s) const = 0;
  mutable long long calls_ = 0;
};

// f(base u {e}) - f(base). Two oracle calls, or one with a cached base value.
// Throws std::out_of_range if e is not a ground-set id. Adding an element that
// is already present gains exactly zero.
double marginal_gain(const ValueOracle& f, std::span<const int> base, int e);
double marginal_gain(const ValueOracle& f, std::span<const int> base, double base_value, int e);

// The objective seen after committing a seed set A: z(S) = f(S u A) - f(A).
// Every evaluate() forwards one call to the parent oracle, so parent counts
// stay the ground truth. Holds mutable scratch; use from one thread at a time.
class ContractedObjective final : public ValueOracle {
 public:
  ContractedObjective(const ValueOracle& parent, Subset a);
  // Variant for callers that already paid for f(A).
  ContractedObjective(const ValueOracle& parent, Subset a, double f_a);

  double base_value() const { return f_a_; }
  int ground_size() const override { return parent_.ground_size(); }
  std::unique_ptr<ValueOracle> clone() const override;

 private:
  double value_of(std::span<const int> s) const override;

  const ValueOracle& parent_;
  Subset a_;
  double f_a_;
  mutable ScratchUnion scratch_;
};

}  // namespace submax
