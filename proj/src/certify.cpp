#include "grr/certify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grr/cayley.hpp"
#include "grr/errors.hpp"
#include "grr/group.hpp"
#include "grr/schur.hpp"

namespace grr {

namespace {

int mod(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

bool coprime_diff(int a, int b, int n) { return std::gcd(std::abs(a - b), n) == 1; }

nlohmann::json order_json(const GroupOrder& order) {
  if (order <= std::numeric_limits<std::uint64_t>::max()) return order.convert_to<std::uint64_t>();
  return order.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Hypotheses check_hypotheses(int n, const Triple& x) {
  Hypotheses h;
  h.odd_gt5 = n % 2 == 1 && n > 5;
  h.linear_relation = mod(3LL * x.r + x.s - 4LL * x.t, n) == 0;
  h.diff_gcds = coprime_diff(x.r, x.s, n) && coprime_diff(x.s, x.t, n) && coprime_diff(x.r, x.t, n);
  return h;
}

Enumeration enumerate_triples(int n, bool canonical) {
  if (n % 2 == 0 || n <= 5) throw std::invalid_argument("enumerate_triples: n must be odd and greater than 5");
  Enumeration e;
  e.n = n;
  e.canonical = canonical;

  std::vector<Triple> full;
  for (int r = 0; r < n; ++r) {
    for (int t = 0; t < n; ++t) {
      const Triple x{r, mod(4LL * t - 3LL * r, n), t};
      if (check_hypotheses(n, x).diff_gcds) full.push_back(x);
    }
  }
  std::sort(full.begin(), full.end());
  e.full_count = static_cast<int>(full.size());

  std::set<Triple> seen;
  for (const Triple& x : full) {
    if (seen.count(x)) continue;
    ++e.negation_classes;
    seen.insert(x);
    seen.insert(Triple{mod(-x.r, n), mod(-x.s, n), mod(-x.t, n)});
  }

  if (!canonical) {
    e.triples = std::move(full);
    return e;
  }
  for (const Triple& x : full) {
    if (x.r != 0) continue;
    std::set<Triple> orbit;
    for (int d = 0; d < n; ++d) orbit.insert(Triple{mod(x.r + d, n), mod(x.s + d, n), mod(x.t + d, n)});
    e.triples.push_back(x);
    e.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  }
  return e;
}

TripleCertificate verify_triple(int n, int r, int s, int t) {
  if (n <= 0) throw std::invalid_argument("verify_triple: n must be positive");
  for (int x : {r, s, t}) {
    if (x < 0 || x >= n) throw std::out_of_range("verify_triple: exponents must lie in [0, n)");
  }
  if (r == s || s == t || r == t) throw DegenerateConnectingSet("reflections ab^r, ab^s, ab^t are not distinct");

  const GroupPtr dn = make_dihedral(n);
  const ElementSet conn = make_element_set(*dn, std::vector<Element>{
      DihedralLabel{1, r}.index(n), DihedralLabel{1, s}.index(n), DihedralLabel{1, t}.index(n)});

  TripleCertificate cert;
  cert.n = n;
  cert.r = r;
  cert.s = s;
  cert.t = t;
  cert.hypotheses = check_hypotheses(n, Triple{r, s, t});

  const Graph cayley = build_cayley(*dn, conn);
  const SchurPartition ring = closure(dn, conn);
  cert.closure_rank = ring.rank();
  cert.closure_trivial = is_trivial(ring);
  cert.aut_order = automorphisms(cayley).order;
  cert.sring_aut_order = sring_aut_order(ring);
  cert.is_grr = cert.aut_order == dn->order();
  cert.lemma2 = lemma2_report(n, r, s, t, !ring.has_class(conn));
  cert.consistent = (!cert.closure_trivial || cert.aut_order == dn->order()) && cert.aut_order == cert.sring_aut_order;
  return cert;
}

nlohmann::json to_json(const TripleCertificate& cert) {
  return {
      {"n", cert.n},
      {"r", cert.r},
      {"s", cert.s},
      {"t", cert.t},
      {"hypotheses",
       {{"odd_gt5", cert.hypotheses.odd_gt5},
        {"linear_relation", cert.hypotheses.linear_relation},
        {"diff_gcds", cert.hypotheses.diff_gcds}}},
      {"closure_rank", cert.closure_rank},
      {"closure_trivial", cert.closure_trivial},
      {"lemma2",
       {{"cond1", cert.lemma2.cond1_not_basic},
        {"cond2", cert.lemma2.cond2_diffs_coprime},
        {"cond3", cert.lemma2.cond3_no_midpoint}}},
      {"aut_order", order_json(cert.aut_order)},
      {"sring_aut_order", order_json(cert.sring_aut_order)},
      {"is_grr", cert.is_grr},
      {"consistent", cert.consistent},
  };
}

std::string csv_header() {
  return "n,r,s,t,odd_gt5,linear_relation,diff_gcds,closure_rank,closure_trivial,"
         "lemma2_cond1,lemma2_cond2,lemma2_cond3,aut_order,sring_aut_order,is_grr,consistent";
}

std::string to_csv(const TripleCertificate& c) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream out;
  out << c.n << ',' << c.r << ',' << c.s << ',' << c.t << ',' << b(c.hypotheses.odd_gt5) << ','
      << b(c.hypotheses.linear_relation) << ',' << b(c.hypotheses.diff_gcds) << ',' << c.closure_rank << ','
      << b(c.closure_trivial) << ',' << b(c.lemma2.cond1_not_basic) << ',' << b(c.lemma2.cond2_diffs_coprime) << ','
      << b(c.lemma2.cond3_no_midpoint) << ',' << c.aut_order << ',' << c.sring_aut_order << ',' << b(c.is_grr) << ','
      << b(c.consistent);
  return out.str();
}

std::string to_text(const TripleCertificate& c) {
  std::ostringstream out;
  out << "n=" << c.n << " (r,s,t)=(" << c.r << ',' << c.s << ',' << c.t << ")"
      << " hypotheses=" << (c.hypotheses.all() ? "all" : "partial") << " rank=" << c.closure_rank
      << " trivial=" << yes_no(c.closure_trivial) << " aut=" << c.aut_order << " sring_aut=" << c.sring_aut_order
      << " lemma2=" << yes_no(c.lemma2.cond1_not_basic) << '/' << yes_no(c.lemma2.cond2_diffs_coprime) << '/'
      << yes_no(c.lemma2.cond3_no_midpoint) << " grr=" << yes_no(c.is_grr) << " consistent=" << yes_no(c.consistent);
  return out.str();
}

int BatchSummary::exit_code() const {
  if (inconsistencies > 0) return kExitInconsistent;
  if (contradictions > 0) return kExitContradiction;
  return kExitOk;
}

nlohmann::json to_json(const BatchSummary& s) {
  return {
      {"triples_checked", s.triples_checked},
      {"grrs_confirmed", s.grrs_confirmed},
      {"inconsistencies", s.inconsistencies},
      {"contradictions", s.contradictions},
      {"errors", s.errors},
      {"empty_n", s.empty_n},
      {"skipped_n", s.skipped_n},
      {"aborted", s.aborted},
  };
}

BatchSummary batch(const BatchOptions& options, const std::function<void(const BatchRecord&)>& sink) {
  BatchSummary summary;
  const int jobs = std::max(1, options.jobs);
  for (int n = options.from; n <= options.to; ++n) {
    if (n % 2 == 0 || n <= 5) {
      summary.skipped_n.push_back(n);
      continue;
    }
    const Enumeration e = enumerate_triples(n, options.canonical);
    if (e.triples.empty()) {
      summary.empty_n.push_back(n);
      continue;
    }

    std::vector<BatchRecord> records(e.triples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next.fetch_add(1); k < records.size(); k = next.fetch_add(1)) {
        BatchRecord& rec = records[k];
        rec.n = n;
        rec.triple = e.triples[k];
        try {
          rec.certificate = verify_triple(n, rec.triple.r, rec.triple.s, rec.triple.t);
        } catch (const std::exception& ex) {
          rec.error = ex.what();
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (int j = 1; j < std::min<int>(jobs, static_cast<int>(records.size())); ++j) pool.emplace_back(worker);
      worker();
    }

    for (const BatchRecord& rec : records) {
      ++summary.triples_checked;
      if (!rec.certificate) {
        ++summary.errors;
      } else {
        if (rec.certificate->is_grr) ++summary.grrs_confirmed;
        if (!rec.certificate->consistent) ++summary.inconsistencies;
        if (rec.certificate->counterexample()) ++summary.contradictions;
      }
      sink(rec);
    }
    if (summary.inconsistencies > 0) {
      summary.aborted = n < options.to;
      break;
    }
  }
  return summary;
}

}  // namespace grr
