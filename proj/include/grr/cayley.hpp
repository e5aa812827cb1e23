#pragma once

#include <string>
#include <vector>

#include "grr/automorphism.hpp"
#include "grr/graph.hpp"
#include "grr/group.hpp"
#include "grr/perm_group.hpp"
#include "grr/schur.hpp"

namespace grr {

struct ConnectingSetCheck {
  bool ok = false;
  bool identity_free = false;
  bool inverse_closed = false;
  bool generates = false;
  std::vector<std::string> diagnostics;

  explicit operator bool() const { return ok; }
};

/// 1 not in S, S = S^-1, and S generates the group.
ConnectingSetCheck validate_connecting_set(const FiniteGroup& group, const ElementSet& s);

/// Cay(G, S): vertices are group elements, u ~ u*s for s in S. Throws
/// InvalidConnectingSet when S fails validate_connecting_set().
Graph build_cayley(const FiniteGroup& group, const ElementSet& s);

/// The maps u -> g*u, one per group element in index order.
std::vector<Permutation> left_translations(const FiniteGroup& group);

/// Aut(Cay(G, S)) has order |G|. Left translations always embed G, so equal
/// orders mean Aut is G acting regularly.
bool is_grr(const FiniteGroup& group, const ElementSet& s);

/// Arc (u, v) colored by the class of u^-1 * v: the union of all basic
/// Cayley graphs of the partition as one colored structure.
ArcColoring basic_relation_coloring(const SchurPartition& p);

/// Order of the group of permutations preserving every basic relation.
/// Throws NotASchurRing when the partition fails check_schur_axioms().
GroupOrder sring_aut_order(const SchurPartition& p);

}  // namespace grr
