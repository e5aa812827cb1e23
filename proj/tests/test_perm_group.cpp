#include <doctest.h>

#include <random>

#include "grr/perm_group.hpp"
#include "oracles.hpp"

using namespace grr;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

std::vector<std::vector<int>> images(const std::vector<Permutation>& gens) {
  std::vector<std::vector<int>> out;
  for (const auto& g : gens) out.emplace_back(g.image().begin(), g.image().end());
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);

  const Permutation p({1, 2, 0, 3});
  const Permutation q({0, 1, 3, 2});
  CHECK(p.then(q)(1) == q(p(1)));
  CHECK(p.then(q).image()[2] == 0);
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.inverse().then(p) == Permutation::identity(4));
  CHECK(p.cycles() == "(0 1 2)");
  CHECK(p.then(q).cycles() == "(0 1 3 2)");
  CHECK(Permutation::identity(3).cycles() == "()");
}

TEST_CASE("group orders of small generator sets") {
  CHECK(group_order(std::vector<Permutation>{}) == 1);
  CHECK(group_order(std::vector<Permutation>{Permutation({1, 2, 3, 4, 0})}) == 5);
  const std::vector<Permutation> s3 = {Permutation({1, 0, 2}), Permutation({1, 2, 0})};
  CHECK(group_order(s3) == 6);
  // S_n from a transposition and an n-cycle.
  std::vector<int> cycle(12);
  for (int i = 0; i < 12; ++i) cycle[i] = (i + 1) % 12;
  std::vector<int> swap(12);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  const std::vector<Permutation> sn = {Permutation(swap), Permutation(cycle)};
  CHECK(group_order(sn) == 479001600);
  // 25! does not fit in 64 bits.
  std::vector<int> big(25), t(25);
  for (int i = 0; i < 25; ++i) big[i] = (i + 1) % 25;
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  const GroupOrder order = group_order(std::vector<Permutation>{Permutation(big), Permutation(t)});
  CHECK(order.str() == "15511210043330985984000000");
}

TEST_CASE("schreier-sims matches closure under products") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Permutation> gens;
    for (int i = 0; i < k; ++i) {
      // Mix in sparse permutations so that small groups show up too.
      if (rng() % 2) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::swap(img[rng() % n], img[rng() % n]);
        gens.emplace_back(img);
      } else {
        gens.push_back(random_perm(rng, n));
      }
    }
    const StabilizerChain chain(n, gens);
    CHECK(chain.order() == oracle::naive_group_size(images(gens), n));
    GroupOrder product = 1;
    for (int s : chain.orbit_sizes()) product *= s;
    CHECK(product == chain.order());
    for (const auto& g : gens) CHECK(chain.contains(g));
  }
}

TEST_CASE("membership") {
  const std::vector<Permutation> rot = {Permutation({1, 2, 3, 0})};
  const StabilizerChain chain(4, rot);
  CHECK(chain.contains(Permutation({2, 3, 0, 1})));
  CHECK(chain.contains(Permutation::identity(4)));
  CHECK_FALSE(chain.contains(Permutation({1, 0, 2, 3})));
  CHECK_FALSE(chain.contains(Permutation::identity(5)));
}

TEST_CASE("degree mismatch") {
  const std::vector<Permutation> gens = {Permutation({1, 0}), Permutation({0, 2, 1})};
  CHECK_THROWS_AS(StabilizerChain(3, gens), std::invalid_argument);
}
