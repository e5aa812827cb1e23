#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "grr/group.hpp"
#include "grr/group_ring.hpp"

namespace grr {

/// A partition of a group's elements, read as the basic sets of a Schur ring.
///
/// Class ids are assigned by ascending minimum element, so two partitions
/// with the same classes compare equal and serialize identically. The
/// constructor only enforces disjointness; whether the classes cover the
/// group and satisfy the ring axioms is reported by check_schur_axioms().
class SchurPartition {
 public:
  SchurPartition(GroupPtr group, std::vector<ElementSet> classes);

  /// Builds the partition whose classes are the fibers of `color` (one entry
  /// per element, any integer values).
  static SchurPartition from_coloring(GroupPtr group, const std::vector<int>& color);
  static SchurPartition discrete(GroupPtr group);
  /// {identity} and everything else.
  static SchurPartition coarsest(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int rank() const { return static_cast<int>(classes_.size()); }
  const std::vector<ElementSet>& classes() const { return classes_; }
  const ElementSet& basic_set(int id) const { return classes_[id]; }
  // -1 for elements not covered by any class.
  int class_of(Element x) const { return class_of_[x]; }
  bool covers_group() const;
  // True when `set` is exactly one of the classes.
  bool has_class(const ElementSet& set) const;
  // True when `set` is a union of classes.
  bool is_union_of_classes(const ElementSet& set) const;
  // Every class of *this lies inside a class of `coarser`.
  bool refines(const SchurPartition& coarser) const;

  friend bool operator==(const SchurPartition& a, const SchurPartition& b) {
    return a.group_->token() == b.group_->token() && a.classes_ == b.classes_;
  }

 private:
  GroupPtr group_;
  std::vector<ElementSet> classes_;
  std::vector<int> class_of_;
};

/// One level set of a group-ring element's coefficient function.
struct Fiber {
  Coefficient value;
  ElementSet elements;

  friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// Splits x into the sets of elements sharing a nonzero coefficient, ordered
/// by ascending coefficient.
std::vector<Fiber> sw_split(const GroupRingElement& x);

/// Basic sets of the smallest Schur ring whose module contains the simple
/// quantity of `c`.
///
/// Starts from the partition cut out by {1}, C and C^-1 and refines it to a
/// fixpoint: every product of two class sums splits classes along its
/// coefficient level sets, and classes are split until the class set is
/// closed under elementwise inversion. Every split is forced in any Schur ring
/// containing C, so the fixpoint is the coarsest one. Class pairs are
/// scheduled through a worklist and re-queued when either class changes.
SchurPartition closure(GroupPtr group, const ElementSet& c);

bool is_trivial(const SchurPartition& p);

/// beta(i, j, k) is the multiplicity of B_k in B_i * B_j.
class StructureTensor {
 public:
  StructureTensor(int rank, std::vector<Coefficient> beta) : rank_(rank), beta_(std::move(beta)) {}

  int rank() const { return rank_; }
  Coefficient operator()(int i, int j, int k) const {
    return beta_[(static_cast<std::size_t>(i) * rank_ + j) * rank_ + k];
  }

 private:
  int rank_;
  std::vector<Coefficient> beta_;
};

/// Throws NotASchurRing if some product of class sums is not constant on a class.
StructureTensor structure_constants(const SchurPartition& p);

struct SchurCheck {
  bool ok = true;
  bool covers = true;
  bool identity_class = true;
  bool inverse_closed = true;
  bool products_closed = true;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return ok; }
};

SchurCheck check_schur_axioms(const SchurPartition& p);

// "rank=r" then one "id: label label ..." line per class.
void write_partition(std::ostream& out, const SchurPartition& p);
std::string format_partition(const SchurPartition& p);
SchurPartition read_partition(std::istream& in, GroupPtr group);

}  // namespace grr
