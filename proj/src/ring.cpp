#include "sympow/ring.hpp"

#include <map>
#include <mutex>

namespace sympow {

Ring::Ring(FieldHandle field, std::vector<std::string> names, MonomialOrder order,
           std::vector<int> weights)
    : field_(field), names_(std::move(names)), order_(order), weights_(std::move(weights)) {}

RingHandle Ring::make(FieldHandle field, std::vector<std::string> names, MonomialOrder order,
                      std::vector<int> weights) {
  if (field == nullptr) throw AlgebraError("ring needs a field");
  if (names.empty() || names.size() > static_cast<std::size_t>(Monomial::max_vars))
    throw AlgebraError("ring must have between 1 and 7 variables");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw AlgebraError("duplicate variable name " + names[i]);
  if (weights.empty()) weights.assign(names.size(), 1);
  if (weights.size() != names.size()) throw AlgebraError("one weight per variable required");
  for (int w : weights)
    if (w < 0) throw AlgebraError("variable weights must be non-negative");
  return RingHandle(new Ring(field, std::move(names), order, std::move(weights)));
}

RingHandle Ring::standard(FieldHandle field) {
  static std::mutex mu;
  static std::map<FieldHandle, RingHandle> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[field];
  if (!slot) slot = make(field, {"x", "y", "z"});
  return slot;
}

int Ring::weighted_degree(Monomial m) const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += weights_[static_cast<std::size_t>(i)] * m[i];
  return d;
}

int Ring::variable_index(std::string_view name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

bool Ring::same_as(const Ring& other) const {
  return this == &other || (field_ == other.field_ && names_ == other.names_ &&
                            order_ == other.order_ && weights_ == other.weights_);
}

RingHandle Ring::with_order(MonomialOrder order) const {
  return make(field_, names_, order, weights_);
}

}  // namespace sympow
