#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harmonic {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on the dense vertex set {0, ..., n-1}.
///
/// Adjacency lists are kept sorted and the edge list is kept in
/// lexicographic order, so two graphs compare equal exactly when they have
/// the same labeled edge set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list; throws GraphError on loops,
  /// duplicates, or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_.size(); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  int degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const Edge> edges() const { return edges_; }

  /// Applies the relabeling old -> perm[old]; perm must be a permutation.
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

inline Graph new_graph(int n) { return Graph(n); }

/// Returns a copy of g with the edge uv added.
Graph add_edge(Graph g, Vertex u, Vertex v);

inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Part sizes (a, b), a <= b, when g is a connected complete bipartite graph.
std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g);

int max_degree(const Graph& g);

}  // namespace harmonic
