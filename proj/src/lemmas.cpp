#include "grr/lemmas.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "grr/group.hpp"
#include "grr/schur.hpp"

namespace grr {

namespace {

int mod(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

Lemma1Result lemma1_check(int n, int r, int t) {
  if (n <= 0 || n % 2 == 0) throw std::invalid_argument("lemma1: n must be a positive odd integer");
  if (std::gcd(std::abs(r - t), n) != 1) throw std::invalid_argument("lemma1: r - t must be coprime to n");

  const auto zn = make_cyclic(n);
  const ElementSet pair = make_element_set(*zn, std::vector<Element>{mod(r, n), mod(t, n)});
  const SchurPartition p = closure(zn, pair);

  Lemma1Result result;
  if (!p.has_class(pair)) {
    result.vacuous = true;
    return result;
  }
  for (int s = 1; s < n; ++s) {
    if (std::gcd(s, n) != 1) continue;
    result.tested.push_back(s);
    const ElementSet sym = make_element_set(*zn, std::vector<Element>{s, mod(-s, n)});
    if (!p.has_class(sym)) {
      result.holds = false;
      result.failures.push_back(s);
    }
  }
  return result;
}

bool lemma1_property(int n, int r, int t) { return lemma1_check(n, r, t).holds; }

Lemma2Report lemma2_report(int n, int r, int s, int t, bool cond1) {
  if (n <= 0) throw std::invalid_argument("lemma2: n must be positive");
  r = mod(r, n);
  s = mod(s, n);
  t = mod(t, n);

  Lemma2Report report;
  report.cond1_not_basic = cond1;
  report.diff_gcds = {std::gcd(std::abs(r - s), n), std::gcd(std::abs(s - t), n), std::gcd(std::abs(r - t), n)};
  report.cond2_diffs_coprime = report.diff_gcds[0] == 1 && report.diff_gcds[1] == 1 && report.diff_gcds[2] == 1;

  report.midpoint_hits = {mod(r + s - 2LL * t, n) == 0, mod(r + t - 2LL * s, n) == 0, mod(s + t - 2LL * r, n) == 0};
  report.cond3_no_midpoint = !report.midpoint_hits[0] && !report.midpoint_hits[1] && !report.midpoint_hits[2];
  return report;
}

}  // namespace grr
