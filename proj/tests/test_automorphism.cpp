#include <doctest.h>

#include <random>

#include "grr/automorphism.hpp"
#include "oracles.hpp"

using namespace grr;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

void check_generators(const Graph& g, const PermGroup& aut) {
  for (const auto& p : aut.generators) CHECK(is_automorphism(g, p));
  CHECK(group_order(aut.generators) == aut.order);
}

}  // namespace

TEST_CASE("classic graphs") {
  CHECK(automorphisms(complete(6)).order == 720);
  CHECK(automorphisms(cycle(5)).order == 10);
  CHECK(automorphisms(from_graph6("IheA@GUAo")).order == 120);
  CHECK(automorphisms(Graph(1)).order == 1);
  CHECK(automorphisms(Graph(0)).order == 1);
  // Empty graph on 21 vertices: 21! exceeds 64 bits.
  CHECK(automorphisms(Graph(21)).order.str() == "51090942171709440000");
  // Cube Q3.
  CHECK(automorphisms(from_graph6("Gs@ipo")).order == 48);

  for (const auto& g : {complete(6), cycle(7), from_graph6("IheA@GUAo")}) check_generators(g, automorphisms(g));
}

TEST_CASE("vertex colors restrict automorphisms") {
  const std::vector<Edge> path = {{0, 1}, {1, 2}, {2, 3}};
  CHECK(automorphisms(Graph(4, path)).order == 2);
  CHECK(automorphisms(Graph(4, path, {1, 0, 0, 0})).order == 1);
  CHECK(automorphisms(Graph(6, {}, {0, 0, 1, 1, 1, 2})).order == 12);
  const Graph c = cycle(6);
  CHECK(automorphisms(Graph(6, c.edges(), {0, 1, 0, 1, 0, 1})).order == 6);
}

TEST_CASE("directed arc colorings") {
  // Directed 5-cycle: only rotations survive.
  std::vector<int> arcs(25, 0);
  for (int i = 0; i < 5; ++i) arcs[i * 5 + (i + 1) % 5] = 1;
  const ArcColoring directed(5, arcs);
  CHECK(automorphisms(directed).order == 5);
  CHECK(oracle::naive_aut_count(directed) == 5);
  CHECK_THROWS_AS(ArcColoring(2, {0, 0, 0}), std::invalid_argument);

  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int colors = 2 + static_cast<int>(rng() % 2);
    std::vector<int> a(n * n);
    for (auto& x : a) x = static_cast<int>(rng() % colors);
    const ArcColoring s(n, a);
    const PermGroup aut = automorphisms(s);
    CHECK(aut.order == oracle::naive_aut_count(s));
    for (const auto& p : aut.generators) CHECK(is_automorphism(s, p));
  }
}

TEST_CASE("random graphs against brute force") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, trial % 2 ? 0.3 : 0.6);
    const PermGroup aut = automorphisms(g);
    CHECK(aut.order == oracle::naive_aut_count(g));
    check_generators(g, aut);
  }
}

TEST_CASE("search is deterministic") {
  const Graph p = from_graph6("IheA@GUAo");
  const PermGroup a = automorphisms(p);
  const PermGroup b = automorphisms(p);
  CHECK(a.generators == b.generators);
  CHECK(a.base == b.base);
}

TEST_CASE("is_automorphism") {
  const Graph c = cycle(5);
  CHECK(is_automorphism(c, Permutation({1, 2, 3, 4, 0})));
  CHECK_FALSE(is_automorphism(c, Permutation({1, 0, 2, 3, 4})));
  CHECK_FALSE(is_automorphism(c, Permutation({1, 0, 2})));
}
