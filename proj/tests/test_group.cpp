#include <doctest.h>

#include <sstream>

#include "grr/group.hpp"
#include "oracles.hpp"

using namespace grr;

TEST_CASE("dihedral group of order 2n") {
  const auto d3 = make_dihedral(3);
  CHECK(d3->order() == 6);
  CHECK(d3->identity() == DihedralLabel{0, 0}.index(3));

  for (int n : {1, 2, 5, 11}) {
    const auto dn = make_dihedral(n);
    REQUIRE(dn->order() == 2 * n);
    for (int x = 0; x < dn->order(); ++x)
      for (int y = 0; y < dn->order(); ++y) CHECK(dn->mul(x, y) == oracle::dihedral_mul(n, x, y));
  }
}

TEST_CASE("product of two reflections is the rotation by the exponent difference") {
  const int n = 7;
  const auto d7 = make_dihedral(n);
  for (int r = 0; r < n; ++r) {
    for (int t = 0; t < n; ++t) {
      const Element product = d7->mul(DihedralLabel{1, r}.index(n), DihedralLabel{1, t}.index(n));
      CHECK(DihedralLabel::from_index(n, product) == DihedralLabel{0, ((t - r) % n + n) % n});
    }
  }
}

TEST_CASE("reflections are involutions and rotations form Z_n") {
  for (int n : {3, 4, 7, 12}) {
    const auto dn = make_dihedral(n);
    const auto zn = make_cyclic(n);
    for (int k = 0; k < n; ++k) {
      const Element refl = DihedralLabel{1, k}.index(n);
      CHECK(dn->mul(refl, refl) == dn->identity());
      CHECK(dn->inv(refl) == refl);
      for (int j = 0; j < n; ++j) {
        // k -> b^k is a homomorphism from Z_n onto the rotations.
        const Element prod = dn->mul(DihedralLabel{0, k}.index(n), DihedralLabel{0, j}.index(n));
        CHECK(prod == DihedralLabel{0, zn->mul(k, j)}.index(n));
      }
    }
    // a b a = b^-1
    const Element a = DihedralLabel{1, 0}.index(n);
    const Element b = DihedralLabel{0, 1 % n}.index(n);
    CHECK(dn->mul(dn->mul(a, b), a) == dn->inv(b));
    CHECK(dn->element_order(b) == n);
  }
}

TEST_CASE("inverse map is an involution") {
  for (const auto& g : {make_dihedral(6), make_cyclic(9), make_dihedral(1)}) {
    for (int x = 0; x < g->order(); ++x) {
      CHECK(g->inv(g->inv(x)) == x);
      CHECK(g->mul(x, g->inv(x)) == g->identity());
    }
  }
}

TEST_CASE("cyclic groups") {
  const auto z1 = make_cyclic(1);
  CHECK(z1->order() == 1);
  CHECK(z1->mul(0, 0) == 0);

  const auto z5 = make_cyclic(5);
  CHECK(z5->mul(2, 3) == z5->identity());

  // Order of g^3 in Z_7 by repeated multiplication.
  const auto z7 = make_cyclic(7);
  int k = 1;
  for (Element y = 3; y != z7->identity(); y = z7->mul(y, 3)) ++k;
  CHECK(k == 7);
  CHECK(z7->element_order(3) == 7);
}

TEST_CASE("n = 0 is rejected") {
  CHECK_THROWS_AS(make_dihedral(0), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclic(0), std::invalid_argument);
  CHECK_THROWS_AS(make_cyclic(-3), std::invalid_argument);
}

TEST_CASE("table validation") {
  // Z_3 is fine.
  CHECK_NOTHROW(FiniteGroup(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 0));
  CHECK_THROWS_AS(FiniteGroup(3, {0, 1, 2, 1, 2, 0}, 0), std::invalid_argument);
  // Wrong identity.
  CHECK_THROWS_AS(FiniteGroup(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 1), std::invalid_argument);
  // Latin square with identity 0 but not associative (order 5 loop).
  const std::vector<Element> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop, 0), std::invalid_argument);
  // Entry out of range.
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 2}, 0), std::invalid_argument);
}

TEST_CASE("multiplication table text round trip") {
  const auto d4 = make_dihedral(4);
  std::stringstream buf;
  write_group_table(buf, *d4);
  const auto back = read_group_table(buf);
  REQUIRE(back->order() == 8);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) CHECK(back->mul(x, y) == d4->mul(x, y));

  std::istringstream first_line("3\n0 1 2\n1 2 0\n2 0 1\n");
  CHECK(read_group_table(first_line)->order() == 3);

  std::istringstream truncated("3\n0 1 2\n1 2 0\n");
  CHECK_THROWS_AS(read_group_table(truncated), std::invalid_argument);
  // Index 0 is not the identity here.
  std::istringstream shifted("2\n1 0\n0 1\n");
  CHECK_THROWS_AS(read_group_table(shifted), std::invalid_argument);
}

TEST_CASE("dihedral labels") {
  const int n = 11;
  const auto d = make_dihedral(n);
  CHECK(d->label(0) == "1");
  CHECK(d->label(1) == "b");
  CHECK(d->label(4) == "b^4");
  CHECK(d->label(n) == "a");
  CHECK(d->label(n + 1) == "ab");
  CHECK(d->label(n + 4) == "ab^4");
  CHECK(d->find_label("ab^4") == n + 4);
  CHECK_FALSE(d->find_label("ab^11").has_value());

  CHECK(parse_dihedral_element(n, "a b^4") == n + 4);
  CHECK(parse_dihedral_element(n, "ab^15") == n + 4);
  CHECK(parse_dihedral_element(n, "b^-1") == 10);
  CHECK(parse_dihedral_element(n, "ab^0") == n);
  CHECK(parse_dihedral_element(n, "e") == 0);
  CHECK(parse_dihedral_element(n, " 1 ") == 0);
  CHECK_THROWS_AS(parse_dihedral_element(n, "c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dihedral_element(n, "ab^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_dihedral_element(n, "ba"), std::invalid_argument);

  CHECK(parse_dihedral_set(n, "a, ab,ab^4,a") == ElementSet{n, n + 1, n + 4});
  CHECK(parse_dihedral_set(n, "").empty());
}

TEST_CASE("element sets") {
  const auto z5 = make_cyclic(5);
  CHECK(make_element_set(*z5, std::vector<Element>{3, 1, 3}) == ElementSet{1, 3});
  CHECK_THROWS_AS(make_element_set(*z5, std::vector<Element>{5}), std::out_of_range);
  CHECK(inverse_set(*z5, std::vector<Element>{1, 2}) == ElementSet{3, 4});
}

TEST_CASE("associativity is sampled for large tables") {
  // Z_70 is above the exhaustive limit and must still be accepted.
  CHECK(make_cyclic(70)->order() == 70);
  CHECK(make_dihedral(40)->order() == 80);
}
