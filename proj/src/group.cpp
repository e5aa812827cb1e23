#include "grr/group.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace grr {

namespace {

std::atomic<std::uint64_t> next_token{1};

constexpr int kExhaustiveAssociativityLimit = 64;
constexpr int kAssociativitySamples = 200000;

int mod(long long x, int n) {
  long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<Element> table, Element identity,
                         std::vector<std::string> labels)
    : order_(order),
      identity_(identity),
      mul_(std::move(table)),
      labels_(std::move(labels)),
      token_(next_token.fetch_add(1, std::memory_order_relaxed)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  const auto m = static_cast<std::size_t>(order_);
  if (mul_.size() != m * m) throw std::invalid_argument("multiplication table has wrong size");
  if (!contains(identity_)) throw std::invalid_argument("identity index out of range");
  if (!labels_.empty() && labels_.size() != m) throw std::invalid_argument("label count differs from group order");

  for (Element v : mul_) {
    if (!contains(v)) throw std::invalid_argument("multiplication table entry out of range");
  }
  for (Element x = 0; x < order_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x) {
      throw std::invalid_argument("identity law fails at element " + std::to_string(x));
    }
  }

  inv_.assign(m, -1);
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y) {
      if (mul(x, y) == identity_) {
        if (mul(y, x) != identity_) {
          throw std::invalid_argument("left and right inverses differ at element " + std::to_string(x));
        }
        inv_[x] = y;
        break;
      }
    }
    if (inv_[x] < 0) throw std::invalid_argument("element " + std::to_string(x) + " has no inverse");
  }

  auto assoc = [this](Element x, Element y, Element z) { return mul(mul(x, y), z) == mul(x, mul(y, z)); };
  if (order_ <= kExhaustiveAssociativityLimit) {
    for (Element x = 0; x < order_; ++x)
      for (Element y = 0; y < order_; ++y)
        for (Element z = 0; z < order_; ++z)
          if (!assoc(x, y, z)) throw std::invalid_argument("multiplication is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, order_ - 1);
    for (int i = 0; i < kAssociativitySamples; ++i) {
      if (!assoc(pick(rng), pick(rng), pick(rng))) throw std::invalid_argument("multiplication is not associative");
    }
  }
}

int FiniteGroup::element_order(Element x) const {
  int k = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

std::string FiniteGroup::label(Element x) const {
  if (labels_.empty()) return std::to_string(x);
  return labels_[x];
}

std::optional<Element> FiniteGroup::find_label(std::string_view text) const {
  const std::string key = strip_spaces(text);
  for (Element x = 0; x < order_; ++x) {
    if (label(x) == key) return x;
  }
  return std::nullopt;
}

std::string DihedralLabel::str() const {
  std::string out = epsilon ? "a" : "";
  if (k == 1) {
    out += "b";
  } else if (k > 1) {
    out += "b^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

GroupPtr make_dihedral(int n) {
  if (n <= 0) throw std::invalid_argument("dihedral group needs n >= 1");
  const int m = 2 * n;
  std::vector<Element> table(static_cast<std::size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (Element x = 0; x < m; ++x) {
    const auto lx = DihedralLabel::from_index(n, x);
    labels[x] = lx.str();
    for (Element y = 0; y < m; ++y) {
      const auto ly = DihedralLabel::from_index(n, y);
      DihedralLabel z{lx.epsilon ^ ly.epsilon, ly.epsilon == 0 ? mod(lx.k + ly.k, n) : mod(ly.k - lx.k, n)};
      table[static_cast<std::size_t>(x) * m + y] = z.index(n);
    }
  }
  return std::make_shared<const FiniteGroup>(m, std::move(table), 0, std::move(labels));
}

GroupPtr make_cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic group needs n >= 1");
  std::vector<Element> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (Element x = 0; x < n; ++x) {
    labels[x] = x == 0 ? "1" : x == 1 ? "g" : "g^" + std::to_string(x);
    for (Element y = 0; y < n; ++y) table[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  }
  return std::make_shared<const FiniteGroup>(n, std::move(table), 0, std::move(labels));
}

Element parse_dihedral_element(int n, std::string_view text) {
  if (n <= 0) throw std::invalid_argument("dihedral group needs n >= 1");
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty element label");
  if (s == "1" || s == "e") return 0;

  std::size_t pos = 0;
  int epsilon = 0;
  if (s[pos] == 'a') {
    epsilon = 1;
    ++pos;
  }
  long long k = 0;
  if (pos < s.size()) {
    if (s[pos] != 'b') throw std::invalid_argument("bad dihedral label '" + s + "'");
    ++pos;
    k = 1;
    if (pos < s.size()) {
      if (s[pos] != '^') throw std::invalid_argument("bad dihedral label '" + s + "'");
      ++pos;
      const char* first = s.data() + pos;
      const char* last = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(first, last, k);
      if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("bad exponent in dihedral label '" + s + "'");
      }
    }
  } else if (epsilon == 0) {
    throw std::invalid_argument("bad dihedral label '" + s + "'");
  }
  return DihedralLabel{epsilon, mod(k, n)}.index(n);
}

ElementSet parse_dihedral_set(int n, std::string_view text) {
  ElementSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!strip_spaces(piece).empty()) out.push_back(parse_dihedral_element(n, piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet make_element_set(const FiniteGroup& group, std::span<const Element> elements) {
  ElementSet out(elements.begin(), elements.end());
  for (Element x : out) {
    if (!group.contains(x)) throw std::out_of_range("element index " + std::to_string(x) + " out of range");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet inverse_set(const FiniteGroup& group, std::span<const Element> elements) {
  ElementSet out;
  out.reserve(elements.size());
  for (Element x : elements) out.push_back(group.inv(x));
  return make_element_set(group, out);
}

GroupPtr read_group_table(std::istream& in) {
  int m = 0;
  if (!(in >> m) || m <= 0) throw std::invalid_argument("group table: expected a positive order on the first line");
  std::vector<Element> table(static_cast<std::size_t>(m) * m);
  for (auto& v : table) {
    if (!(in >> v)) throw std::invalid_argument("group table: truncated multiplication table");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("group table: trailing data after the table");
  return std::make_shared<const FiniteGroup>(m, std::move(table), 0);
}

void write_group_table(std::ostream& out, const FiniteGroup& group) {
  if (group.identity() != 0) throw std::invalid_argument("group table export requires identity at index 0");
  const int m = group.order();
  out << m << '\n';
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      if (y) out << ' ';
      out << group.mul(x, y);
    }
    out << '\n';
  }
}

}  // namespace grr
