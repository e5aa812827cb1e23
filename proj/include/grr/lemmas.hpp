#pragma once

#include <array>
#include <vector>

namespace grr {

/// Outcome of the two-element basic-set check over Z_n.
struct Lemma1Result {
  bool holds = true;
  // {g^r, g^t} is not a class of its own closure, so nothing was tested.
  bool vacuous = false;
  // Exponents s (1 <= s < n, coprime to n) whose pair {g^s, g^-s} was checked.
  std::vector<int> tested;
  // Exponents whose pair was not a class.
  std::vector<int> failures;
};

/// In Z_n (n odd) with gcd(r - t, n) = 1: if {g^r, g^t} is a basic set of
/// closure(Z_n, {g^r, g^t}), every {g^s, g^-s} with s coprime to n must be a
/// basic set of that ring as well. Throws std::invalid_argument when n is even
/// or r - t is not coprime to n.
Lemma1Result lemma1_check(int n, int r, int t);
bool lemma1_property(int n, int r, int t);

/// Triviality conditions for the closure of ab^r + ab^s + ab^t over D_n.
struct Lemma2Report {
  // Supplied by the caller: the three reflections do not form a basic set.
  bool cond1_not_basic = false;
  // Every pairwise exponent difference is coprime to n.
  bool cond2_diffs_coprime = false;
  // No exponent is the midpoint of the other two mod n.
  bool cond3_no_midpoint = false;

  // gcd(|r-s|, n), gcd(|s-t|, n), gcd(|r-t|, n).
  std::array<int, 3> diff_gcds{};
  // Whether r+s = 2t, r+t = 2s, s+t = 2r hold mod n.
  std::array<bool, 3> midpoint_hits{};
};

/// Exponents are reduced mod n before evaluation.
Lemma2Report lemma2_report(int n, int r, int s, int t, bool cond1);

}  // namespace grr
