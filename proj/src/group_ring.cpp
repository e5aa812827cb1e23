#include "grr/group_ring.hpp"

#include <stdexcept>
#include <string>

#include "grr/errors.hpp"

namespace grr {

namespace {

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow("group-ring coefficient overflow in addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow("group-ring coefficient overflow in multiplication");
  return r;
}

void require_same_group(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.group().token() != y.group().token()) throw GroupMismatch();
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw std::invalid_argument("group-ring element needs a group");
  coeff_.assign(static_cast<std::size_t>(group_->order()), 0);
}

GroupRingElement::GroupRingElement(GroupPtr group, std::vector<Coefficient> coeff)
    : group_(std::move(group)), coeff_(std::move(coeff)) {
  if (!group_) throw std::invalid_argument("group-ring element needs a group");
  if (coeff_.size() != static_cast<std::size_t>(group_->order())) {
    throw std::invalid_argument("coefficient vector length differs from group order");
  }
}

GroupRingElement GroupRingElement::one(GroupPtr group) {
  GroupRingElement x(std::move(group));
  x.coeff_[x.group_->identity()] = 1;
  return x;
}

ElementSet GroupRingElement::support() const {
  ElementSet out;
  for (Element g = 0; g < group_->order(); ++g) {
    if (coeff_[g] != 0) out.push_back(g);
  }
  return out;
}

Coefficient GroupRingElement::mass() const {
  Coefficient total = 0;
  for (Coefficient c : coeff_) total = checked_add(total, c);
  return total;
}

bool GroupRingElement::is_zero() const {
  for (Coefficient c : coeff_) {
    if (c != 0) return false;
  }
  return true;
}

GroupRingElement gr_add(const GroupRingElement& x, const GroupRingElement& y) {
  require_same_group(x, y);
  std::vector<Coefficient> out(x.coefficients().begin(), x.coefficients().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(out[i], y.coefficients()[i]);
  return GroupRingElement(x.group_ptr(), std::move(out));
}

GroupRingElement gr_scale(Coefficient k, const GroupRingElement& x) {
  std::vector<Coefficient> out(x.coefficients().begin(), x.coefficients().end());
  for (auto& c : out) c = checked_mul(k, c);
  return GroupRingElement(x.group_ptr(), std::move(out));
}

GroupRingElement gr_mul(const GroupRingElement& x, const GroupRingElement& y) {
  require_same_group(x, y);
  const FiniteGroup& group = x.group();
  const ElementSet sx = x.support();
  const ElementSet sy = y.support();
  std::vector<Coefficient> out(static_cast<std::size_t>(group.order()), 0);
  for (Element g : sx) {
    for (Element h : sy) {
      auto& slot = out[group.mul(g, h)];
      slot = checked_add(slot, checked_mul(x[g], y[h]));
    }
  }
  return GroupRingElement(x.group_ptr(), std::move(out));
}

GroupRingElement gr_pow(const GroupRingElement& x, unsigned e) {
  GroupRingElement result = GroupRingElement::one(x.group_ptr());
  GroupRingElement base = x;
  while (e > 0) {
    if (e & 1u) result = gr_mul(result, base);
    e >>= 1;
    if (e > 0) base = gr_mul(base, base);
  }
  return result;
}

GroupRingElement simple_quantity(GroupPtr group, std::span<const Element> set) {
  GroupRingElement x(std::move(group));
  for (Element g : set) {
    if (!x.group().contains(g)) throw std::out_of_range("element index " + std::to_string(g) + " out of range");
    x.set(g, 1);
  }
  return x;
}

}  // namespace grr
