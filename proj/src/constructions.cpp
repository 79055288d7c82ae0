#include "harmonic/constructions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

namespace harmonic {

namespace {

void require_positive(int value, const char* what) {
  if (value < 1) throw GraphError(std::string(what) + " must be positive, got " + std::to_string(value));
}

}  // namespace

Graph path(int n) {
  require_positive(n, "path order");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph star(int n) {
  require_positive(n, "star order");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int a, int b) {
  require_positive(a, "part size a");
  require_positive(b, "part size b");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(a + b, edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle order must be at least 3, got " + std::to_string(n));
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete(int n) {
  require_positive(n, "complete graph order");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

SpiderSpec SpiderSpec::make(int x, int y, int z) {
  std::array<int, 3> legs{x, y, z};
  for (int leg : legs) require_positive(leg, "spider leg length");
  std::sort(legs.begin(), legs.end(), std::greater<>());
  return {legs[0], legs[1], legs[2]};
}

Graph spider(const SpiderSpec& spec) {
  const SpiderSpec s = SpiderSpec::make(spec.a, spec.b, spec.c);
  Graph g(s.order());
  Vertex next = 1;
  for (int leg : {s.a, s.b, s.c}) {
    Vertex prev = 0;
    for (int i = 0; i < leg; ++i, ++next) {
      g.add_edge(prev, next);
      prev = next;
    }
  }
  return g;
}

Graph attach_paths(const PathAttachment& att) {
  const int n = att.base.order();
  if (n < 2) throw GraphError("path attachment needs a nontrivial base graph");
  if (att.w < 0 || att.w >= n) throw GraphError("attachment vertex " + std::to_string(att.w) + " out of range");
  if (att.p < 0 || att.q < 0) throw GraphError("pendant path lengths must be non-negative");
  if (!is_connected(att.base)) throw GraphError("path attachment needs a connected base graph");

  std::vector<Edge> edges(att.base.edges().begin(), att.base.edges().end());
  Vertex next = n;
  for (int len : {att.p, att.q}) {
    Vertex prev = att.w;
    for (int i = 0; i < len; ++i, ++next) {
      edges.push_back({prev, next});
      prev = next;
    }
  }
  return Graph::from_edges(n + att.p + att.q, edges);
}

Graph remove_edge(Graph g, Vertex u, Vertex v) {
  g.remove_edge(u, v);
  return g;
}

}  // namespace harmonic
