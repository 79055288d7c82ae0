#include "harmonic/graph.hpp"

#include <algorithm>
#include <numeric>

namespace harmonic {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (Edge e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    g.edges_.push_back(e);
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end()) {
    throw GraphError("duplicate edge");
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(order()));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) {
    throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  edges_.insert(it, e);
  auto& au = adj_[u];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  edges_.erase(it);
  auto& au = adj_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != adj_.size()) throw GraphError("permutation has wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    check_vertex(p);
    if (seen[p]) throw GraphError("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.push_back({perm[e.u], perm[e.v]});
  return from_edges(order(), mapped);
}

Graph add_edge(Graph g, Vertex u, Vertex v) {
  g.add_edge(u, v);
  return g;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  return g.size() == static_cast<std::size_t>(n - 1) && is_connected(g);
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto a = g.neighbors(e.u);
    auto b = g.neighbors(e.v);
    // Sorted-list intersection test.
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return false;
      if (*i < *j) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return true;
}

std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> side(n, -1);
  std::vector<Vertex> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (side[w] < 0) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return std::nullopt;
      }
    }
  }
  const int a = static_cast<int>(std::count(side.begin(), side.end(), 0));
  const int b = n - a;
  if (g.size() != static_cast<std::size_t>(a) * static_cast<std::size_t>(b)) return std::nullopt;
  return std::pair{std::min(a, b), std::max(a, b)};
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace harmonic
