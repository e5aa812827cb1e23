#include "grr/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace grr {

ArcColoring::ArcColoring(int n, std::vector<int> arc_colors, std::vector<int> vertex_colors)
    : n_(n), arcs_(std::move(arc_colors)), vertex_colors_(std::move(vertex_colors)) {
  if (n_ < 0) throw std::invalid_argument("arc coloring: negative size");
  if (arcs_.size() != static_cast<std::size_t>(n_) * n_) throw std::invalid_argument("arc coloring: expected n*n arc colors");
  if (vertex_colors_.empty()) vertex_colors_.assign(static_cast<std::size_t>(n_), 0);
  if (vertex_colors_.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("arc coloring: expected n vertex colors");
  for (int c : arcs_) {
    if (c < 0) throw std::invalid_argument("arc coloring: colors must be non-negative");
  }
}

ArcColoring ArcColoring::from_graph(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> arcs(static_cast<std::size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) arcs[static_cast<std::size_t>(u) * n + v] = u == v ? 2 : g.has_edge(u, v) ? 1 : 0;
  }
  return ArcColoring(n, std::move(arcs), g.colors());
}

bool is_automorphism(const ArcColoring& s, const Permutation& p) {
  const int n = s.size();
  if (p.degree() != n) return false;
  for (int u = 0; u < n; ++u) {
    if (s.vertex_color(u) != s.vertex_color(p(u))) return false;
    for (int v = 0; v < n; ++v) {
      if (s.arc(u, v) != s.arc(p(u), p(v))) return false;
    }
  }
  return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.colors()[v] != g.colors()[p(v)]) return false;
  }
  // Edge count is preserved by a bijection, so edges mapping to edges suffices.
  for (auto [u, v] : g.edges()) {
    if (!g.has_edge(p(u), p(v))) return false;
  }
  return true;
}

namespace {

// Ordered partition of the points: cells are contiguous runs of `lab`.
struct Partition {
  std::vector<int> lab;
  std::vector<int> cell_start;  // per position
  std::vector<int> cell_end;    // per cell start position
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

class Search {
 public:
  explicit Search(const ArcColoring& s) : s_(s), n_(s.size()) {
    int top = 0;
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v) top = std::max(top, s_.arc(u, v));
    const long long radix = top + 1;
    // Pair each arc color with its reverse so that refinement on out-arcs
    // also sees the in-arcs of directed structures.
    paired_.resize(static_cast<std::size_t>(n_) * n_);
    for (int u = 0; u < n_; ++u) {
      for (int v = 0; v < n_; ++v) {
        paired_[static_cast<std::size_t>(u) * n_ + v] = s_.arc(u, v) * radix + s_.arc(v, u);
      }
    }
  }

  PermGroup run() {
    PermGroup result;
    result.degree = n_;
    if (n_ == 0) return result;

    path_.push_back(initial_partition());
    while (!path_.back().discrete()) {
      const Partition& p = path_.back();
      const int t = target_cell(p);
      const int v = *std::min_element(p.lab.begin() + t, p.lab.begin() + p.cell_end[t]);
      base_.push_back(v);
      path_.push_back(individualize(p, v));
    }
    first_leaf_ = path_.back().lab;

    GroupOrder search_order = 1;
    for (auto level = static_cast<std::ptrdiff_t>(base_.size()) - 1; level >= 0; --level) {
      const auto i = static_cast<std::size_t>(level);
      const Partition& p = path_[i];
      const int t = target_cell(p);
      std::vector<int> cell(p.lab.begin() + t, p.lab.begin() + p.cell_end[t]);
      std::sort(cell.begin(), cell.end());

      // Every generator found so far fixes base_[0..i).
      std::vector<int> orbit = orbit_partition();
      for (int w : cell) {
        if (find(orbit, w) == find(orbit, base_[i])) continue;
        Partition q = individualize(p, w);
        if (q.cell_start != path_[i + 1].cell_start) continue;
        if (auto g = descend(q, i + 1)) {
          generators_.push_back(std::move(*g));
          orbit = orbit_partition();
        }
      }
      const int root = find(orbit, base_[i]);
      const auto size = std::count_if(cell.begin(), cell.end(), [&](int w) { return find(orbit, w) == root; });
      search_order *= static_cast<unsigned>(size);
    }

    StabilizerChain chain(n_, generators_);
    if (chain.order() != search_order) {
      throw std::logic_error("automorphism search: orbit product disagrees with the stabilizer chain");
    }
    result.generators = std::move(generators_);
    result.order = std::move(search_order);
    result.base = base_;
    return result;
  }

 private:
  long long color(int u, int v) const { return paired_[static_cast<std::size_t>(u) * n_ + v]; }

  Partition initial_partition() const {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return s_.vertex_color(a) < s_.vertex_color(b); });
    p.cell_start.assign(n_, 0);
    p.cell_end.assign(n_, 0);
    std::deque<int> queue;
    int start = 0;
    for (int pos = 0; pos < n_; ++pos) {
      if (pos > 0 && s_.vertex_color(p.lab[pos]) != s_.vertex_color(p.lab[pos - 1])) {
        p.cell_end[start] = pos;
        queue.push_back(start);
        ++p.cells;
        start = pos;
      }
      p.cell_start[pos] = start;
    }
    p.cell_end[start] = n_;
    queue.push_back(start);
    ++p.cells;
    refine(p, std::move(queue));
    return p;
  }

  // First cell of minimum size > 1, by position.
  static int target_cell(const Partition& p) {
    int best = -1;
    int best_size = 0;
    const int n = static_cast<int>(p.lab.size());
    for (int start = 0; start < n; start = p.cell_end[start]) {
      const int size = p.cell_end[start] - start;
      if (size > 1 && (best < 0 || size < best_size)) {
        best = start;
        best_size = size;
      }
    }
    return best;
  }

  Partition individualize(const Partition& p, int v) const {
    Partition q = p;
    const int pos = static_cast<int>(std::find(q.lab.begin(), q.lab.end(), v) - q.lab.begin());
    const int start = q.cell_start[pos];
    const int end = q.cell_end[start];
    std::swap(q.lab[start], q.lab[pos]);
    q.cell_end[start] = start + 1;
    q.cell_end[start + 1] = end;
    for (int k = start + 1; k < end; ++k) q.cell_start[k] = start + 1;
    ++q.cells;
    refine(q, std::deque<int>{start});
    return q;
  }

  // Splits cells against splitter cells until the partition is equitable.
  // Only positions and color multisets decide the result, so the refined
  // partition commutes with every automorphism.
  void refine(Partition& p, std::deque<int> queue) const {
    std::vector<char> queued(n_, 0);
    for (int c : queue) queued[c] = 1;
    std::vector<std::pair<std::vector<long long>, int>> keyed;
    while (!queue.empty() && !p.discrete()) {
      const int w = queue.front();
      queue.pop_front();
      queued[w] = 0;
      const std::vector<int> splitter(p.lab.begin() + w, p.lab.begin() + p.cell_end[w]);

      for (int start = 0; start < n_;) {
        const int end = p.cell_end[start];
        if (end - start > 1) {
          keyed.clear();
          for (int pos = start; pos < end; ++pos) {
            const int x = p.lab[pos];
            std::vector<long long> key;
            key.reserve(splitter.size());
            for (int y : splitter) key.push_back(color(x, y));
            std::sort(key.begin(), key.end());
            keyed.emplace_back(std::move(key), x);
          }
          std::sort(keyed.begin(), keyed.end());
          if (keyed.front().first != keyed.back().first) {
            int frag = start;
            for (int k = 0; k < end - start; ++k) {
              const int pos = start + k;
              if (k > 0 && keyed[k].first != keyed[k - 1].first) {
                p.cell_end[frag] = pos;
                frag = pos;
                ++p.cells;
              }
              p.lab[pos] = keyed[k].second;
              p.cell_start[pos] = frag;
            }
            p.cell_end[frag] = end;
            for (int f = start; f < end; f = p.cell_end[f]) {
              if (!queued[f]) {
                queued[f] = 1;
                queue.push_back(f);
              }
            }
          }
        }
        start = end;
      }
    }
  }

  // Depth-first search below `p` (which matches the first path at `level`)
  // for a leaf whose correspondence with the first leaf is an automorphism.
  std::optional<Permutation> descend(const Partition& p, std::size_t level) const {
    if (p.discrete()) {
      std::vector<int> image(n_);
      for (int pos = 0; pos < n_; ++pos) image[first_leaf_[pos]] = p.lab[pos];
      Permutation g(std::move(image));
      if (is_automorphism(s_, g)) return g;
      return std::nullopt;
    }
    const int t = target_cell(p);
    std::vector<int> cell(p.lab.begin() + t, p.lab.begin() + p.cell_end[t]);
    std::sort(cell.begin(), cell.end());
    for (int w : cell) {
      Partition q = individualize(p, w);
      if (q.cell_start != path_[level + 1].cell_start) continue;
      if (auto g = descend(q, level + 1)) return g;
    }
    return std::nullopt;
  }

  std::vector<int> orbit_partition() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : generators_) {
      for (int x = 0; x < n_; ++x) {
        const int a = find(parent, x);
        const int b = find(parent, g(x));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    return parent;
  }

  static int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  const ArcColoring& s_;
  int n_;
  std::vector<long long> paired_;
  std::vector<Partition> path_;
  std::vector<int> base_;
  std::vector<int> first_leaf_;
  std::vector<Permutation> generators_;
};

}  // namespace

PermGroup automorphisms(const ArcColoring& s) { return Search(s).run(); }

PermGroup automorphisms(const Graph& g) { return automorphisms(ArcColoring::from_graph(g)); }

}  // namespace grr
