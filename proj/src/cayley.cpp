#include "grr/cayley.hpp"

#include <algorithm>

#include "grr/errors.hpp"

namespace grr {

ConnectingSetCheck validate_connecting_set(const FiniteGroup& group, const ElementSet& set) {
  ConnectingSetCheck check;
  ElementSet s = set;
  std::sort(s.begin(), s.end());
  for (Element x : s) {
    if (!group.contains(x)) {
      check.diagnostics.push_back("element index " + std::to_string(x) + " out of range");
      return check;
    }
  }

  check.identity_free = !std::binary_search(s.begin(), s.end(), group.identity());
  if (!check.identity_free) check.diagnostics.push_back("connecting set contains the identity");

  check.inverse_closed = true;
  for (Element x : s) {
    if (!std::binary_search(s.begin(), s.end(), group.inv(x))) {
      check.inverse_closed = false;
      check.diagnostics.push_back("inverse of " + group.label(x) + " is missing");
    }
  }

  std::vector<char> reached(static_cast<std::size_t>(group.order()), 0);
  std::vector<Element> frontier{group.identity()};
  reached[group.identity()] = 1;
  int count = 1;
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    for (Element x : s) {
      const Element y = group.mul(frontier[k], x);
      if (!reached[y]) {
        reached[y] = 1;
        frontier.push_back(y);
        ++count;
      }
    }
  }
  check.generates = count == group.order();
  if (!check.generates) {
    check.diagnostics.push_back("connecting set generates a subgroup of order " + std::to_string(count) + " < " +
                                std::to_string(group.order()));
  }

  check.ok = check.identity_free && check.inverse_closed && check.generates;
  return check;
}

Graph build_cayley(const FiniteGroup& group, const ElementSet& s) {
  const auto check = validate_connecting_set(group, s);
  if (!check) {
    std::string why = "invalid connecting set";
    for (const auto& d : check.diagnostics) why += "; " + d;
    throw InvalidConnectingSet(why);
  }
  std::vector<Edge> edges;
  for (Element u = 0; u < group.order(); ++u) {
    for (Element x : s) {
      const Element v = group.mul(u, x);
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(group.order(), edges);
}

std::vector<Permutation> left_translations(const FiniteGroup& group) {
  std::vector<Permutation> out;
  out.reserve(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    std::vector<int> image(static_cast<std::size_t>(group.order()));
    for (Element u = 0; u < group.order(); ++u) image[u] = group.mul(g, u);
    out.emplace_back(std::move(image));
  }
  return out;
}

bool is_grr(const FiniteGroup& group, const ElementSet& s) {
  return automorphisms(build_cayley(group, s)).order == group.order();
}

ArcColoring basic_relation_coloring(const SchurPartition& p) {
  const FiniteGroup& group = p.group();
  const int m = group.order();
  std::vector<int> arcs(static_cast<std::size_t>(m) * m);
  for (Element u = 0; u < m; ++u) {
    for (Element v = 0; v < m; ++v) {
      const int cls = p.class_of(group.mul(group.inv(u), v));
      if (cls < 0) throw NotASchurRing("partition does not cover the group");
      arcs[static_cast<std::size_t>(u) * m + v] = cls;
    }
  }
  return ArcColoring(m, std::move(arcs));
}

GroupOrder sring_aut_order(const SchurPartition& p) {
  const auto check = check_schur_axioms(p);
  if (!check) {
    std::string why = "not a Schur ring";
    for (const auto& d : check.diagnostics) why += "; " + d;
    throw NotASchurRing(why);
  }
  return automorphisms(basic_relation_coloring(p)).order;
}

}  // namespace grr
