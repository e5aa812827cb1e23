#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grr/group.hpp"

namespace grr {

using Coefficient = std::int64_t;

/// An element of the integer group ring Z[G]: one coefficient per group element.
///
/// Arithmetic is exact. Any intermediate that leaves the int64 range raises
/// CoefficientOverflow; operands over different group objects raise
/// GroupMismatch.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group);  // zero
  GroupRingElement(GroupPtr group, std::vector<Coefficient> coeff);

  static GroupRingElement one(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  Coefficient operator[](Element x) const { return coeff_[x]; }
  std::span<const Coefficient> coefficients() const { return coeff_; }
  void set(Element x, Coefficient value) { coeff_.at(x) = value; }

  ElementSet support() const;
  Coefficient mass() const;
  bool is_zero() const;

  friend bool operator==(const GroupRingElement& x, const GroupRingElement& y) {
    return x.group_->token() == y.group_->token() && x.coeff_ == y.coeff_;
  }

 private:
  GroupPtr group_;
  std::vector<Coefficient> coeff_;
};

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_scale(Coefficient k, const GroupRingElement& x);
GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y);
GroupRingElement gr_pow(const GroupRingElement& x, unsigned e);

inline GroupRingElement operator+(const GroupRingElement& x, const GroupRingElement& y) { return gr_add(x, y); }
inline GroupRingElement operator*(const GroupRingElement& x, const GroupRingElement& y) { return gr_mul(x, y); }
inline GroupRingElement operator*(Coefficient k, const GroupRingElement& x) { return gr_scale(k, x); }

/// Sum of the elements of `set` with coefficient 1 (the "bar" of a subset).
GroupRingElement simple_quantity(GroupPtr group, std::span<const Element> set);

}  // namespace grr
