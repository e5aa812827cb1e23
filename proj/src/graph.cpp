#include "grr/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace grr {

Graph::Graph(int vertex_count, std::span<const Edge> edges, std::vector<int> colors)
    : n_(vertex_count), colors_(std::move(colors)) {
  if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
  if (colors_.empty()) {
    colors_.assign(static_cast<std::size_t>(n_), 0);
  } else {
    if (colors_.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("graph: color count differs from vertex count");
    colored_ = true;
  }
  adj_.resize(n_);
  matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
      throw std::invalid_argument("graph: repeated edge " + std::to_string(u) + " " + std::to_string(v));
    }
    matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
    matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  std::sort(edges_.begin(), edges_.end());
}

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  append_size(out, n);
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  for (char c : text) {
    if (c < kBias || c > 126) throw std::invalid_argument("graph6: byte outside the printable range 63..126");
  }
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  auto take6 = [&](int count) {
    long long v = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw std::invalid_argument("graph6: truncated size field");
      v = (v << 6) | (text[pos++] - kBias);
    }
    return v;
  };
  long long n = 0;
  if (text[0] != 126) {
    n = take6(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take6(6);
  } else {
    pos = 1;
    n = take6(3);
  }

  const long long pairs = n * (n - 1) / 2;
  const long long need = (pairs + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != need) throw std::invalid_argument("graph6: wrong body length");

  std::vector<Edge> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - kBias;
      if (byte & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const int byte = text[pos + bit / 6] - kBias;
    if (byte & ((1 << (6 - bit % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw std::invalid_argument("edge list: expected 'V E' header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
    edges.emplace_back(u, v);
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("edge list: trailing data after the last edge");
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::istringstream lines(text);
  std::string first;
  while (std::getline(lines, first)) {
    if (first.find_first_not_of(" \t\r") != std::string::npos) break;
  }
  std::istringstream probe(first);
  long long a = 0, b = 0;
  std::string extra;
  if (probe >> a >> b && !(probe >> extra)) {
    std::istringstream all(text);
    return read_edge_list(all);
  }
  const auto begin = first.find_first_not_of(" \t\r");
  if (begin == std::string::npos) throw std::invalid_argument("graph file is empty");
  return from_graph6(std::string_view(first).substr(begin));
}

void write_dot(std::ostream& out, const Graph& g, std::span<const std::string> names) {
  auto name = [&](Vertex v) { return names.empty() ? std::to_string(v) : names[v]; };
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << name(v) << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

}  // namespace grr
