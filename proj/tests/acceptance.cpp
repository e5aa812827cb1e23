// Acceptance checks A1..A9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "grr/cayley.hpp"
#include "grr/certify.hpp"
#include "grr/lemmas.hpp"
#include "oracles.hpp"

using namespace grr;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Element refl(int n, int k) { return DihedralLabel{1, ((k % n) + n) % n}.index(n); }
Element rot(int n, int k) { return DihedralLabel{0, ((k % n) + n) % n}.index(n); }

std::string triple_str(int n, const Triple& x) {
  std::ostringstream out;
  out << "n=" << n << " (" << x.r << "," << x.s << "," << x.t << ")";
  return out.str();
}

std::vector<TripleCertificate> a1_certificates;

Outcome a1() {
  Outcome out;
  std::string summary;
  for (int n : {11, 13}) {
    const auto start = Clock::now();
    const auto e = enumerate_triples(n);
    if (e.triples.empty()) out.fail("no triples enumerated for n=" + std::to_string(n));
    int good = 0;
    for (const Triple& x : e.triples) {
      const auto c = verify_triple(n, x.r, x.s, x.t);
      a1_certificates.push_back(c);
      if (c.closure_trivial && c.aut_order == 2 * n) ++good;
      else out.fail("");
    }
    const double t = seconds_since(start);
    if (t > 60.0) out.fail("");
    summary += "n=" + std::to_string(n) + ": " + std::to_string(good) + "/" + std::to_string(e.triples.size()) +
               " trivial with aut = 2n (" + std::to_string(t).substr(0, 4) + " s); ";
  }
  out.detail = summary;
  return out;
}

Outcome a2() {
  Outcome out;
  for (const auto& c : a1_certificates) {
    if (c.aut_order != c.sring_aut_order) out.fail(triple_str(c.n, {c.r, c.s, c.t}) + ": orders differ");
  }
  if (a1_certificates.empty()) out.fail("no certificates from A1");

  std::mt19937 rng(2024);
  int checked = 0;
  for (const auto& g : {make_dihedral(5), make_dihedral(7), make_cyclic(7), make_cyclic(9)}) {
    int found = 0;
    for (int attempt = 0; found < 50 && attempt < 100000; ++attempt) {
      std::set<Element> s;
      for (Element x = 0; x < g->order(); ++x) {
        if (x == g->identity() || rng() % 3 != 0) continue;
        s.insert(x);
        s.insert(g->inv(x));
      }
      const ElementSet set(s.begin(), s.end());
      if (!validate_connecting_set(*g, set)) continue;
      ++found;
      const GroupOrder graph_side = automorphisms(build_cayley(*g, set)).order;
      const GroupOrder ring_side = sring_aut_order(closure(g, set));
      if (graph_side != ring_side) out.fail("random set over group of order " + std::to_string(g->order()));
    }
    if (found < 50) out.fail("could not draw 50 connecting sets");
    checked += found;
  }
  if (out.ok) out.detail = std::to_string(a1_certificates.size()) + " certificates, " + std::to_string(checked) + " random sets";
  return out;
}

Outcome a3() {
  Outcome out;
  for (int n : {9, 15}) {
    if (!enumerate_triples(n).triples.empty()) out.fail("n=" + std::to_string(n) + " not empty");
    // Independent reason: 3 divides s - t = 3(t - r) for every pair.
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < n; ++t) {
        const int s = ((4 * t - 3 * r) % n + n) % n;
        if (std::gcd(((s - t) % n + n) % n, n) % 3 != 0) out.fail("s - t not divisible by 3");
      }
  }
  return out;
}

Outcome a4() {
  Outcome out;
  const auto c = verify_triple(7, 0, 4, 1);
  if (!c.consistent) out.fail("certificate inconsistent");
  if (c.lemma2.cond3_no_midpoint) out.fail("cond3 reported true");
  if (out.ok) out.detail = "rank=" + std::to_string(c.closure_rank) + " aut=" + c.aut_order.str() + " grr=" + (c.is_grr ? "yes" : "no");
  return out;
}

Outcome a5() {
  Outcome out;
  const auto start = Clock::now();
  int pairs = 0, nonvacuous = 0;
  for (int n : {5, 7, 9, 15}) {
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < n; ++t) {
        if (std::gcd(std::abs(r - t), n) != 1) continue;
        ++pairs;
        const auto res = lemma1_check(n, r, t);
        if (!res.vacuous) ++nonvacuous;
        if (!res.holds) out.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " t=" + std::to_string(t));
      }
  }
  const double t = seconds_since(start);
  if (t > 10.0) out.fail("took " + std::to_string(t) + " s");
  if (out.ok) out.detail = std::to_string(pairs) + " pairs, " + std::to_string(nonvacuous) + " with the pair basic";
  return out;
}

Outcome a6() {
  Outcome out;
  int checked = 0;
  for (int n : {11, 13, 17, 19}) {
    const auto dn = make_dihedral(n);
    for (const Triple& x : enumerate_triples(n).triples) {
      const auto sum = simple_quantity(dn, std::vector<Element>{refl(n, x.r), refl(n, x.s), refl(n, x.t)});
      GroupRingElement rhs = 3 * GroupRingElement::one(dn);
      for (int d : {1, 3, 4})
        for (int sign : {1, -1}) {
          const Element y = rot(n, sign * d * (x.r - x.t));
          rhs.set(y, rhs[y] + 1);
        }
      if (gr_pow(sum, 2) != rhs) out.fail("three-reflection square fails at " + triple_str(n, x));
      ++checked;

      if (n != 19) continue;
      const int u = x.r - x.t;
      auto pm = [&](int k) { return std::vector<Element>{rot(n, k * u), rot(n, -k * u)}; };
      ElementSet six;
      for (int k : {1, 3, 4})
        for (Element y : pm(k)) six.push_back(y);
      const auto six_sum = simple_quantity(dn, six);
      GroupRingElement expect = 6 * GroupRingElement::one(dn) + 2 * six_sum;
      for (auto [k, coeff] : std::vector<std::pair<int, Coefficient>>{{6, 1}, {8, 1}, {5, 2}, {7, 2}, {2, 3}})
        for (Element y : pm(k)) expect.set(y, expect[y] + coeff);
      if (gr_pow(six_sum, 2) != expect) out.fail("six-rotation square fails at " + triple_str(n, x));
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " expansions";
  return out;
}

Outcome a7() {
  Outcome out;
  long long graphs = 0;
  for (int v = 0; v <= 6; ++v) {
    std::vector<Edge> slots;
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) slots.emplace_back(a, b);
    for (long long mask = 0; mask < (1LL << slots.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) e.push_back(slots[i]);
      const Graph g(v, e);
      ++graphs;
      if (automorphisms(g).order != oracle::naive_aut_count(g)) out.fail("mismatch on " + to_graph6(g));
    }
  }
  std::mt19937 rng(8);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 8, 0.2 + 0.03 * i);
    ++graphs;
    if (automorphisms(g).order != oracle::naive_aut_count(g)) out.fail("mismatch on " + to_graph6(g));
  }
  if (out.ok) out.detail = std::to_string(graphs) + " graphs";
  return out;
}

Outcome a8() {
  Outcome out;
  std::vector<Edge> k6, c5;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) k6.emplace_back(u, v);
  for (int i = 0; i < 5; ++i) c5.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
  if (automorphisms(Graph(6, k6)).order != 720) out.fail("K6");
  if (automorphisms(Graph(5, c5)).order != 10) out.fail("C5");
  if (sring_aut_order(SchurPartition::coarsest(make_dihedral(3))) != 720) out.fail("rank-2 partition of D_3");
  for (int n : {3, 5, 7}) {
    if (sring_aut_order(SchurPartition::discrete(make_dihedral(n))) != 2 * n) out.fail("discrete partition of D_" + std::to_string(n));
  }
  return out;
}

Outcome a9() {
  Outcome out;
  std::vector<GroupPtr> groups;
  for (int n = 1; n <= 10; ++n) groups.push_back(make_cyclic(n));
  for (int n = 1; n <= 5; ++n) groups.push_back(make_dihedral(n));
  long long subsets = 0;
  for (const auto& g : groups) {
    const int m = g->order();
    const auto all = oracle::all_schur_partitions(*g);
    for (int mask = 0; mask < (1 << m); ++mask) {
      ElementSet c;
      for (int x = 0; x < m; ++x)
        if (mask >> x & 1) c.push_back(x);
      const auto expected = oracle::coarsest_containing(all, c);
      const auto p = closure(g, c);
      std::vector<std::vector<int>> got(p.classes().begin(), p.classes().end());
      std::sort(got.begin(), got.end());
      ++subsets;
      if (expected.empty() || got != expected) out.fail("group of order " + std::to_string(m) + " subset mask " + std::to_string(mask));
    }
  }
  if (out.ok) out.detail = std::to_string(groups.size()) + " groups, " + std::to_string(subsets) + " subsets";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"A1 trivial closure and regular automorphism group for n in {11, 13}", a1},
      {"A2 graph and S-ring automorphism orders agree", a2},
      {"A3 no admissible triples for n in {9, 15}", a3},
      {"A4 n = 7 probe is internally consistent", a4},
      {"A5 plus-minus basic sets over n in {5, 7, 9, 15}", a5},
      {"A6 group-ring square identities", a6},
      {"A7 automorphism search matches brute force", a7},
      {"A8 classical anchors", a8},
      {"A9 closure matches brute-force coarsest S-ring", a9},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double t = seconds_since(start);
    std::printf("[%s] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", name, t, o.detail.empty() ? "" : " - ",
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
