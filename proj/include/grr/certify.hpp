#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grr/lemmas.hpp"
#include "grr/perm_group.hpp"

namespace grr {

/// Exponents of the reflections ab^r, ab^s, ab^t.
struct Triple {
  int r = 0;
  int s = 0;
  int t = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct Hypotheses {
  bool odd_gt5 = false;          // n odd and n > 5
  bool linear_relation = false;  // 3r + s = 4t (mod n)
  bool diff_gcds = false;        // every pairwise difference coprime to n

  bool all() const { return odd_gt5 && linear_relation && diff_gcds; }
};

Hypotheses check_hypotheses(int n, const Triple& x);

struct Enumeration {
  int n = 0;
  bool canonical = false;
  std::vector<Triple> triples;
  // With `canonical`, the size of each listed triple's orbit under the
  // rotation shift (r, s, t) -> (r + d, s + d, t + d).
  std::vector<int> orbit_sizes;
  // Number of triples in the full (non-canonical) list.
  int full_count = 0;
  // Orbits of the full list under (r, s, t) -> (-r, -s, -t).
  int negation_classes = 0;
};

/// All (r, s, t) in [0, n)^3 with s = 4t - 3r (mod n) and pairwise differences
/// coprime to n, sorted. With `canonical`, only the r = 0 representatives of
/// the shift orbits (conjugation by b^c adds 2c to each exponent; 2 is a unit
/// mod odd n). Throws std::invalid_argument unless n is odd and n > 5.
Enumeration enumerate_triples(int n, bool canonical = false);

/// Everything known about Cay(D_n, {ab^r, ab^s, ab^t}), from both the
/// closure route and the automorphism route.
struct TripleCertificate {
  int n = 0;
  int r = 0;
  int s = 0;
  int t = 0;
  Hypotheses hypotheses;
  int closure_rank = 0;
  bool closure_trivial = false;
  Lemma2Report lemma2;
  GroupOrder aut_order = 0;
  GroupOrder sring_aut_order = 0;
  bool is_grr = false;
  // Trivial closure forces aut_order = 2n, and both orders agree.
  bool consistent = false;

  // All hypotheses hold yet the graph is not a GRR.
  bool counterexample() const { return hypotheses.all() && !is_grr; }
};

/// Requires 0 <= r, s, t < n. Throws DegenerateConnectingSet when the three
/// reflections are not distinct and InvalidConnectingSet when they do not
/// generate D_n. `s` need not satisfy the linear relation; the certificate
/// records whether it does.
TripleCertificate verify_triple(int n, int r, int s, int t);

nlohmann::json to_json(const TripleCertificate& cert);
std::string csv_header();
std::string to_csv(const TripleCertificate& cert);
std::string to_text(const TripleCertificate& cert);

struct BatchOptions {
  int from = 0;
  int to = 0;
  int jobs = 1;
  bool canonical = false;
};

/// One verified (or failed) triple, delivered in (n, r, s, t) order.
struct BatchRecord {
  int n = 0;
  Triple triple;
  std::optional<TripleCertificate> certificate;
  std::string error;
};

struct BatchSummary {
  long long triples_checked = 0;
  long long grrs_confirmed = 0;
  long long inconsistencies = 0;
  long long contradictions = 0;
  long long errors = 0;
  std::vector<int> empty_n;    // odd n > 5 with no admissible triple
  std::vector<int> skipped_n;  // n outside the admissible range (even or <= 5)
  bool aborted = false;        // stopped early after an inconsistent certificate

  int exit_code() const;
};

nlohmann::json to_json(const BatchSummary& summary);

/// Enumerates and verifies every n in [from, to]. Triples of one n are
/// verified on up to `jobs` threads; `sink` is called from the calling thread
/// in sorted order. Stops after the first n that produced an inconsistent
/// certificate.
BatchSummary batch(const BatchOptions& options, const std::function<void(const BatchRecord&)>& sink);

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitContradiction = 2;
inline constexpr int kExitInconsistent = 3;

}  // namespace grr
