#pragma once

#include <cstdint>

#include "harmonic/graph.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

struct EdgeWeight {
  Edge edge;
  Rational weight;
};

/// Harmonic weight 2/(deg(u)+deg(v)) of the edge uv; throws GraphError if
/// uv is not an edge.
Rational edge_weight(const Graph& g, Vertex u, Vertex v);

/// H(G) = sum over edges of 2/(deg(u)+deg(v)); 0 for edgeless graphs.
Rational harmonic_index(const Graph& g);

/// Randić index, sum over edges of 1/sqrt(deg(u)deg(v)).
/// Neumaier-compensated; absolute error at most 1e-12 * m.
double randic_index(const Graph& g);

/// First Zagreb index M1(G) = sum of squared degrees.
std::int64_t first_zagreb(const Graph& g);

/// Edge of minimal harmonic weight (equivalently, maximal degree sum);
/// ties go to the lexicographically smallest (u, v). Throws on m = 0.
EdgeWeight min_weight_edge(const Graph& g);

}  // namespace harmonic
