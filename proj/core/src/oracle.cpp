#include "submax/oracle.hpp"

#include <stdexcept>
#include <string>

namespace submax {

double marginal_gain(const ValueOracle& f, std::span<const int> base, int e) {
  return marginal_gain(f, base, f.evaluate(base), e);
}

double marginal_gain(const ValueOracle& f, std::span<const int> base, double base_value, int e) {
  if (e < 0 || e >= f.ground_size()) {
    throw std::out_of_range("marginal_gain: element id " + std::to_string(e) +
                            " outside ground set of size " + std::to_string(f.ground_size()));
  }
  return f.evaluate(with_element(base, e)) - base_value;
}

ContractedObjective::ContractedObjective(const ValueOracle& parent, Subset a)
    : parent_(parent), a_(std::move(a)), f_a_(parent_.evaluate(a_)) {}

ContractedObjective::ContractedObjective(const ValueOracle& parent, Subset a, double f_a)
    : parent_(parent), a_(std::move(a)), f_a_(f_a) {}

std::unique_ptr<ValueOracle> ContractedObjective::clone() const {
  return std::make_unique<ContractedObjective>(parent_, a_, f_a_);
}

double ContractedObjective::value_of(std::span<const int> s) const {
  return parent_.evaluate(scratch_.make(s, a_)) - f_a_;
}

}  // namespace submax
