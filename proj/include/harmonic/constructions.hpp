#pragma once

#include "harmonic/graph.hpp"

namespace harmonic {

// Family builders. Labelings: path 0-1-...-(n-1); star centered at 0;
// K_{a,b} with parts {0..a-1} and {a..a+b-1}; cycle 0-1-...-(n-1)-0.
Graph path(int n);
Graph star(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph complete(int n);

/// Leg lengths of a spider T(a,b,c); make() sorts them so a >= b >= c >= 1.
struct SpiderSpec {
  int a = 1;
  int b = 1;
  int c = 1;

  static SpiderSpec make(int x, int y, int z);
  int order() const { return a + b + c + 1; }

  bool operator==(const SpiderSpec&) const = default;
};

/// Branching vertex 0 of degree 3 with legs numbered outward: leg a is
/// 1..a, leg b follows, then leg c.
Graph spider(const SpiderSpec& spec);

/// G(p, q): two pendant paths with p and q new vertices hung at w.
struct PathAttachment {
  Graph base;
  Vertex w = 0;
  int p = 0;
  int q = 0;
};

/// The path of p vertices is numbered n..n+p-1 from w outward, then the q
/// path. Throws GraphError if w is out of range, the base is trivial or
/// disconnected, or p or q is negative.
Graph attach_paths(const PathAttachment& att);

/// Copy of g without the edge uv; throws GraphError on a non-edge.
Graph remove_edge(Graph g, Vertex u, Vertex v);

}  // namespace harmonic
