#include "grr/schur.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "grr/errors.hpp"

namespace grr {

SchurPartition::SchurPartition(GroupPtr group, std::vector<ElementSet> classes)
    : group_(std::move(group)), classes_(std::move(classes)) {
  if (!group_) throw std::invalid_argument("partition needs a group");
  class_of_.assign(static_cast<std::size_t>(group_->order()), -1);
  for (auto& cls : classes_) {
    if (cls.empty()) throw std::invalid_argument("partition classes must be non-empty");
    std::sort(cls.begin(), cls.end());
    if (std::adjacent_find(cls.begin(), cls.end()) != cls.end()) {
      throw std::invalid_argument("partition class lists an element twice");
    }
    for (Element x : cls) {
      if (!group_->contains(x)) throw std::out_of_range("partition element out of range");
    }
  }
  std::sort(classes_.begin(), classes_.end(), [](const ElementSet& a, const ElementSet& b) { return a.front() < b.front(); });
  for (int id = 0; id < rank(); ++id) {
    for (Element x : classes_[id]) {
      if (class_of_[x] != -1) throw std::invalid_argument("partition classes overlap");
      class_of_[x] = id;
    }
  }
}

SchurPartition SchurPartition::from_coloring(GroupPtr group, const std::vector<int>& color) {
  if (color.size() != static_cast<std::size_t>(group->order())) {
    throw std::invalid_argument("coloring length differs from group order");
  }
  std::map<int, ElementSet> by_color;
  for (Element x = 0; x < group->order(); ++x) by_color[color[x]].push_back(x);
  std::vector<ElementSet> classes;
  classes.reserve(by_color.size());
  for (auto& [c, cls] : by_color) classes.push_back(std::move(cls));
  return SchurPartition(std::move(group), std::move(classes));
}

SchurPartition SchurPartition::discrete(GroupPtr group) {
  std::vector<int> color(static_cast<std::size_t>(group->order()));
  for (Element x = 0; x < group->order(); ++x) color[x] = x;
  return from_coloring(std::move(group), color);
}

SchurPartition SchurPartition::coarsest(GroupPtr group) {
  std::vector<int> color(static_cast<std::size_t>(group->order()), 1);
  color[group->identity()] = 0;
  return from_coloring(std::move(group), color);
}

bool SchurPartition::covers_group() const {
  return std::find(class_of_.begin(), class_of_.end(), -1) == class_of_.end();
}

bool SchurPartition::has_class(const ElementSet& set) const {
  if (set.empty() || !group_->contains(set.front())) return false;
  const int id = class_of_[set.front()];
  return id >= 0 && classes_[id] == set;
}

bool SchurPartition::is_union_of_classes(const ElementSet& set) const {
  std::vector<int> hits(classes_.size(), 0);
  for (Element x : set) {
    if (!group_->contains(x) || class_of_[x] < 0) return false;
    ++hits[class_of_[x]];
  }
  for (std::size_t id = 0; id < classes_.size(); ++id) {
    if (hits[id] != 0 && hits[id] != static_cast<int>(classes_[id].size())) return false;
  }
  return true;
}

bool SchurPartition::refines(const SchurPartition& coarser) const {
  if (group_->token() != coarser.group_->token()) throw GroupMismatch();
  for (const auto& cls : classes_) {
    const int target = coarser.class_of(cls.front());
    if (target < 0) return false;
    for (Element x : cls) {
      if (coarser.class_of(x) != target) return false;
    }
  }
  return true;
}

std::vector<Fiber> sw_split(const GroupRingElement& x) {
  std::map<Coefficient, ElementSet> fibers;
  for (Element g = 0; g < x.group().order(); ++g) {
    if (x[g] != 0) fibers[x[g]].push_back(g);
  }
  std::vector<Fiber> out;
  out.reserve(fibers.size());
  for (auto& [value, elements] : fibers) out.push_back({value, std::move(elements)});
  return out;
}

namespace {

// Coefficients of (sum of a) * (sum of b), written into `out`.
void class_product(const FiniteGroup& group, const ElementSet& a, const ElementSet& b, std::vector<Coefficient>& out) {
  std::fill(out.begin(), out.end(), 0);
  for (Element g : a) {
    for (Element h : b) ++out[group.mul(g, h)];
  }
}

// Working state of the closure fixpoint.
class Refiner {
 public:
  Refiner(const FiniteGroup& group, const ElementSet& c) : group_(group), m_(group.order()) {
    std::vector<char> in_c(m_, 0), in_inv(m_, 0);
    for (Element x : c) {
      in_c[x] = 1;
      in_inv[group_.inv(x)] = 1;
    }
    color_.assign(m_, 0);
    std::map<int, int> ids;
    for (Element x = 0; x < m_; ++x) {
      const int sig = x == group_.identity() ? -1 : in_c[x] + 2 * in_inv[x];
      auto [it, fresh] = ids.try_emplace(sig, static_cast<int>(ids.size()));
      if (fresh) members_.emplace_back();
      color_[x] = it->second;
      members_[it->second].push_back(x);
    }
    queued_.assign(static_cast<std::size_t>(m_) * m_, 0);
    split_inverses();
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) enqueue(i, j);
  }

  void run() {
    std::vector<Coefficient> product(m_);
    while (!work_.empty()) {
      const auto [i, j] = work_.front();
      work_.pop_front();
      queued_[static_cast<std::size_t>(i) * m_ + j] = 0;
      class_product(group_, members_[i], members_[j], product);
      auto touched = split_by(product);
      if (touched.empty()) continue;
      auto more = split_inverses();
      touched.insert(touched.end(), more.begin(), more.end());
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int t : touched) {
        for (int k = 0; k < rank(); ++k) {
          enqueue(t, k);
          enqueue(k, t);
        }
      }
    }
  }

  const std::vector<int>& coloring() const { return color_; }

 private:
  int rank() const { return static_cast<int>(members_.size()); }

  void enqueue(int i, int j) {
    auto& flag = queued_[static_cast<std::size_t>(i) * m_ + j];
    if (flag) return;
    flag = 1;
    work_.emplace_back(i, j);
  }

  // Splits every class along the values of `key`; the part holding the
  // smallest key keeps the old id. Returns the ids of all changed classes.
  std::vector<int> split_by(const std::vector<Coefficient>& key) {
    std::vector<int> touched;
    const int old_rank = rank();
    for (int c = 0; c < old_rank; ++c) {
      auto& cls = members_[c];
      if (cls.size() < 2) continue;
      const Coefficient first = key[cls.front()];
      if (std::all_of(cls.begin(), cls.end(), [&](Element x) { return key[x] == first; })) continue;

      std::map<Coefficient, ElementSet> parts;
      for (Element x : cls) parts[key[x]].push_back(x);
      auto it = parts.begin();
      cls = std::move(it->second);
      touched.push_back(c);
      for (++it; it != parts.end(); ++it) {
        const int id = rank();
        for (Element x : it->second) color_[x] = id;
        members_.push_back(std::move(it->second));
        touched.push_back(id);
      }
    }
    return touched;
  }

  std::vector<int> split_inverses() {
    std::vector<int> touched;
    std::vector<Coefficient> key(m_);
    for (;;) {
      for (Element x = 0; x < m_; ++x) key[x] = color_[group_.inv(x)];
      auto step = split_by(key);
      if (step.empty()) return touched;
      touched.insert(touched.end(), step.begin(), step.end());
    }
  }

  const FiniteGroup& group_;
  int m_;
  std::vector<int> color_;
  std::vector<ElementSet> members_;
  std::deque<std::pair<int, int>> work_;
  std::vector<char> queued_;
};

}  // namespace

SchurPartition closure(GroupPtr group, const ElementSet& c) {
  const ElementSet set = make_element_set(*group, c);
  Refiner refiner(*group, set);
  refiner.run();
  return SchurPartition::from_coloring(std::move(group), refiner.coloring());
}

bool is_trivial(const SchurPartition& p) { return p.covers_group() && p.rank() == p.group().order(); }

StructureTensor structure_constants(const SchurPartition& p) {
  if (!p.covers_group()) throw NotASchurRing("partition does not cover the group");
  const FiniteGroup& group = p.group();
  const int r = p.rank();
  std::vector<Coefficient> beta(static_cast<std::size_t>(r) * r * r, 0);
  std::vector<Coefficient> product(group.order());
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      class_product(group, p.basic_set(i), p.basic_set(j), product);
      for (int k = 0; k < r; ++k) {
        const auto& cls = p.basic_set(k);
        const Coefficient value = product[cls.front()];
        for (Element x : cls) {
          if (product[x] != value) {
            throw NotASchurRing("product of classes " + std::to_string(i) + " and " + std::to_string(j) +
                                " is not constant on class " + std::to_string(k));
          }
        }
        beta[(static_cast<std::size_t>(i) * r + j) * r + k] = value;
      }
    }
  }
  return StructureTensor(r, std::move(beta));
}

SchurCheck check_schur_axioms(const SchurPartition& p) {
  constexpr std::size_t kMaxProductDiagnostics = 8;
  SchurCheck check;
  const FiniteGroup& group = p.group();

  for (Element x = 0; x < group.order(); ++x) {
    if (p.class_of(x) < 0) {
      check.covers = false;
      check.diagnostics.push_back("element " + group.label(x) + " is in no class");
    }
  }

  if (!p.has_class(ElementSet{group.identity()})) {
    check.identity_class = false;
    check.diagnostics.push_back("{1} is not a class");
  }

  for (int i = 0; i < p.rank(); ++i) {
    const ElementSet inv = inverse_set(group, p.basic_set(i));
    if (!p.has_class(inv)) {
      check.inverse_closed = false;
      check.diagnostics.push_back("inverse of class " + std::to_string(i) + " is not a class");
    }
  }

  if (check.covers) {
    std::vector<Coefficient> product(group.order());
    std::size_t reported = 0;
    for (int i = 0; i < p.rank(); ++i) {
      for (int j = 0; j < p.rank(); ++j) {
        class_product(group, p.basic_set(i), p.basic_set(j), product);
        for (int k = 0; k < p.rank(); ++k) {
          const auto& cls = p.basic_set(k);
          const bool constant = std::all_of(cls.begin(), cls.end(), [&](Element x) { return product[x] == product[cls.front()]; });
          if (!constant) {
            check.products_closed = false;
            if (reported++ < kMaxProductDiagnostics) {
              check.diagnostics.push_back("B" + std::to_string(i) + "*B" + std::to_string(j) +
                                          " is not constant on B" + std::to_string(k));
            }
          }
        }
      }
    }
  } else {
    check.products_closed = false;
  }

  check.ok = check.covers && check.identity_class && check.inverse_closed && check.products_closed;
  return check;
}

void write_partition(std::ostream& out, const SchurPartition& p) {
  out << "rank=" << p.rank() << '\n';
  for (int id = 0; id < p.rank(); ++id) {
    out << id << ':';
    for (Element x : p.basic_set(id)) out << ' ' << p.group().label(x);
    out << '\n';
  }
}

std::string format_partition(const SchurPartition& p) {
  std::ostringstream out;
  write_partition(out, p);
  return out.str();
}

SchurPartition read_partition(std::istream& in, GroupPtr group) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("rank=", 0) != 0) {
    throw std::invalid_argument("partition: expected 'rank=r' header");
  }
  const int rank = std::stoi(line.substr(5));
  std::vector<ElementSet> classes;
  for (int id = 0; id < rank; ++id) {
    if (!std::getline(in, line)) throw std::invalid_argument("partition: truncated class list");
    const auto colon = line.find(':');
    if (colon == std::string::npos || std::stoi(line.substr(0, colon)) != id) {
      throw std::invalid_argument("partition: expected class id " + std::to_string(id));
    }
    std::istringstream tokens(line.substr(colon + 1));
    ElementSet cls;
    std::string tok;
    while (tokens >> tok) {
      auto x = group->find_label(tok);
      if (!x) x = std::stoi(tok);
      cls.push_back(*x);
    }
    classes.push_back(std::move(cls));
  }
  return SchurPartition(std::move(group), std::move(classes));
}

}  // namespace grr
