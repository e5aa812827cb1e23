#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grr {

using Element = int;
// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<Element>;

/// A finite group stored as an explicit multiplication table.
///
/// Immutable once constructed. Every instance carries a process-unique token
/// so that values tied to a group (group-ring elements, partitions) can tell
/// whether they refer to the same group object.
class FiniteGroup {
 public:
  /// `mul` is the row-major m*m table: mul[x*m + y] = x*y. Validates the
  /// group axioms (associativity exhaustively for m <= 64, sampled above)
  /// and throws std::invalid_argument on failure.
  FiniteGroup(int order, std::vector<Element> mul, Element identity,
              std::vector<std::string> labels = {});

  int order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element x, Element y) const { return mul_[static_cast<std::size_t>(x) * order_ + y]; }
  Element inv(Element x) const { return inv_[x]; }
  std::uint64_t token() const { return token_; }

  bool contains(Element x) const { return x >= 0 && x < order_; }
  int element_order(Element x) const;

  // Display name; falls back to the decimal index when no labels were given.
  std::string label(Element x) const;
  bool has_labels() const { return !labels_.empty(); }
  std::optional<Element> find_label(std::string_view text) const;

 private:
  int order_;
  Element identity_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
  std::uint64_t token_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Element a^epsilon b^k of D_n, stored at index epsilon*n + k.
struct DihedralLabel {
  int epsilon = 0;
  int k = 0;

  Element index(int n) const { return epsilon * n + k; }
  static DihedralLabel from_index(int n, Element x) { return {x / n, x % n}; }
  std::string str() const;

  friend bool operator==(const DihedralLabel&, const DihedralLabel&) = default;
};

/// Dihedral group of order 2n with reflection a and rotation b.
/// Product rule: (e1,k1)(e2,k2) = (e1^e2, k1+k2) if e2 = 0, else (e1^e2, k2-k1),
/// so in particular (ab^r)(ab^t) = b^(t-r).
GroupPtr make_dihedral(int n);

/// Cyclic group Z_n; index i is g^i, the generator is index 1.
GroupPtr make_cyclic(int n);

/// Accepts "1", "e", "a", "b", "b^k", "ab^k", "a b^k" (whitespace ignored,
/// exponents reduced mod n, negative exponents allowed).
Element parse_dihedral_element(int n, std::string_view text);

/// Parses a comma-separated list of dihedral element labels into a sorted set.
ElementSet parse_dihedral_set(int n, std::string_view text);

/// Normalizes a list of indices into an ElementSet, throwing std::out_of_range
/// for indices outside the group.
ElementSet make_element_set(const FiniteGroup& group, std::span<const Element> elements);

ElementSet inverse_set(const FiniteGroup& group, std::span<const Element> elements);

// Plain-text multiplication table: "m", then m rows of m 0-based indices.
// The identity must be index 0.
GroupPtr read_group_table(std::istream& in);
void write_group_table(std::ostream& out, const FiniteGroup& group);

}  // namespace grr
