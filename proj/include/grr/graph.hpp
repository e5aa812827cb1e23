#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grr {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph with sorted adjacency lists and optional vertex colors.
class Graph {
 public:
  /// Throws std::invalid_argument on loops, repeated edges, or endpoints out
  /// of range. An empty `colors` means every vertex has color 0.
  explicit Graph(int vertex_count, std::span<const Edge> edges = {}, std::vector<int> colors = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  // Edges as (u, v) with u < v, lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& colors() const { return colors_; }
  bool is_colored() const { return colored_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.colors_ == b.colors_;
  }

 private:
  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<unsigned char> matrix_;
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  bool colored_ = false;
};

std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

// "V E" header, then one "u v" line per edge.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

/// Reads either format, deciding on the first non-blank line: two integers
/// mean an edge list, anything else is taken as graph6.
Graph read_graph(std::istream& in);

// Optional vertex names; defaults to indices.
void write_dot(std::ostream& out, const Graph& g, std::span<const std::string> names = {});

}  // namespace grr
