#pragma once

#include <vector>

#include "grr/graph.hpp"
#include "grr/perm_group.hpp"

namespace grr {

/// Complete arc-colored structure on n points: every ordered pair (u, v),
/// including u == v, carries an integer color, and every point carries a
/// vertex color. A simple graph is the special case with colors
/// {non-edge, edge, diagonal}.
class ArcColoring {
 public:
  ArcColoring(int n, std::vector<int> arc_colors, std::vector<int> vertex_colors = {});

  static ArcColoring from_graph(const Graph& g);

  int size() const { return n_; }
  int arc(int u, int v) const { return arcs_[static_cast<std::size_t>(u) * n_ + v]; }
  int vertex_color(int v) const { return vertex_colors_[v]; }

 private:
  int n_;
  std::vector<int> arcs_;
  std::vector<int> vertex_colors_;
};

bool is_automorphism(const ArcColoring& s, const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);

/// Full automorphism group of a colored structure.
///
/// Individualization-refinement: the ordered partition is refined to an
/// equitable one (each vertex's multiset of arc colors into every cell is
/// constant on its cell), then the first smallest non-singleton cell is
/// branched on, lowest vertex first. The first leaf fixes a base; for every
/// level, deepest first, each target-cell vertex not already in the base
/// point's orbit is tested by exhaustive search of its subtree. The order is
/// the product of the basic orbit lengths and is cross-checked against a
/// stabilizer chain built from the generators found.
///
/// Deterministic: the same input always yields the same generator list.
PermGroup automorphisms(const ArcColoring& s);
PermGroup automorphisms(const Graph& g);

}  // namespace grr
