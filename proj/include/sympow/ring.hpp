#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sympow/field.hpp"
#include "sympow/monomial.hpp"

namespace sympow {

class Ring;
using RingHandle = std::shared_ptr<const Ring>;

/// Polynomial ring over a field: variable names, a monomial order and a
/// positive (or zero) weight per variable used for degree bookkeeping in
/// the pair-selection strategy.
class Ring {
 public:
  static RingHandle make(FieldHandle field, std::vector<std::string> names,
                         MonomialOrder order = MonomialOrder::grevlex(),
                         std::vector<int> weights = {});
  /// F[x, y, z] with grevlex; cached per field.
  static RingHandle standard(FieldHandle field);

  FieldHandle field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }

  int weighted_degree(Monomial m) const;
  /// Index of the named variable or -1.
  int variable_index(std::string_view name) const;

  bool same_as(const Ring& other) const;
  RingHandle with_order(MonomialOrder order) const;

 private:
  Ring(FieldHandle field, std::vector<std::string> names, MonomialOrder order,
       std::vector<int> weights);

  FieldHandle field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
  std::vector<int> weights_;
};

}  // namespace sympow
