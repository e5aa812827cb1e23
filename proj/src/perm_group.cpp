#include "grr/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace grr {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= degree() || seen[x]) throw std::invalid_argument("permutation image is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> image(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) image[i] = i;
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& second) const {
  if (degree() != second.degree()) throw std::invalid_argument("composing permutations of different degree");
  Permutation out;
  out.image_.resize(image_.size());
  for (int i = 0; i < degree(); ++i) out.image_[i] = second.image_[image_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (int i = 0; i < degree(); ++i) out.image_[image_[i]] = i;
  return out;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<char> done(image_.size(), 0);
  for (int start = 0; start < degree(); ++start) {
    if (done[start] || image_[start] == start) continue;
    out += '(';
    for (int x = start; !done[x]; x = image_[x]) {
      if (x != start) out += ' ';
      out += std::to_string(x);
      done[x] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

int first_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p(i) != i) return i;
  }
  return -1;
}

}  // namespace

StabilizerChain::StabilizerChain(int degree, std::span<const Permutation> generators) : degree_(degree) {
  std::vector<Permutation> strong;
  for (const auto& g : generators) {
    if (g.degree() != degree_) throw std::invalid_argument("generator degree differs from the group degree");
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end()) strong.push_back(g);
  }

  for (const auto& g : strong) {
    const bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return g(b) == b; });
    if (fixes_base) add_level(first_moved_point(g));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : strong) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i && fixes_prefix; ++j) fixes_prefix = g(base_[j]) == base_[j];
      if (fixes_prefix) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(levels_[i]);
  }

  // Each level's Schreier generators must sift through the levels below it;
  // a non-trivial residue becomes a new strong generator and processing
  // resumes at the level where it was added.
  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const auto level = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[level].orbit.size() && !restarted; ++oi) {
      for (std::size_t gi = 0; gi < levels_[level].generators.size() && !restarted; ++gi) {
        const Level& cur = levels_[level];
        const int beta = cur.orbit[oi];
        const Permutation& x = cur.generators[gi];
        const Permutation schreier = cur.transversal[beta].then(x).then(cur.transversal[x(beta)].inverse());
        auto [residue, stop] = sift(schreier, level + 1);
        if (stop == levels_.size() && residue.is_identity()) continue;
        if (stop == levels_.size()) add_level(first_moved_point(residue));
        for (std::size_t l = level + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        restarted = true;
      }
    }
    if (!restarted) --i;
  }
}

void StabilizerChain::add_level(int point) {
  base_.push_back(point);
  levels_.push_back(Level{point, {}, {}, {}, {}});
  rebuild_orbit(levels_.back());
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.transversal.assign(static_cast<std::size_t>(degree_), Permutation());
  level.in_orbit.assign(static_cast<std::size_t>(degree_), 0);
  level.orbit.assign(1, level.point);
  level.in_orbit[level.point] = 1;
  level.transversal[level.point] = Permutation::identity(degree_);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    const int y = level.orbit[k];
    for (const auto& g : level.generators) {
      const int z = g(y);
      if (level.in_orbit[z]) continue;
      level.in_orbit[z] = 1;
      level.transversal[z] = level.transversal[y].then(g);
      level.orbit.push_back(z);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const int b = g(levels_[l].point);
    if (!levels_[l].in_orbit[b]) return {std::move(g), l};
    g = g.then(levels_[l].transversal[b].inverse());
  }
  return {std::move(g), levels_.size()};
}

std::vector<int> StabilizerChain::orbit_sizes() const {
  std::vector<int> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(static_cast<int>(level.orbit.size()));
  return out;
}

GroupOrder StabilizerChain::order() const {
  GroupOrder order = 1;
  for (const auto& level : levels_) order *= static_cast<unsigned>(level.orbit.size());
  return order;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stop] = sift(p, 0);
  return stop == levels_.size() && residue.is_identity();
}

GroupOrder group_order(std::span<const Permutation> generators) {
  if (generators.empty()) return 1;
  return StabilizerChain(generators.front().degree(), generators).order();
}

}  // namespace grr
