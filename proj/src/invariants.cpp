#include "harmonic/invariants.hpp"

#include <cmath>
#include <vector>

namespace harmonic {

Rational edge_weight(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  }
  return Rational(2, g.degree(u) + g.degree(v));
}

Rational harmonic_index(const Graph& g) {
  // Bucket edges by degree sum so only one exact division per distinct sum.
  std::vector<std::int64_t> per_sum(2 * static_cast<std::size_t>(g.order()) + 1, 0);
  for (const Edge& e : g.edges()) ++per_sum[g.degree(e.u) + g.degree(e.v)];
  Rational total;
  for (std::size_t s = 2; s < per_sum.size(); ++s) {
    if (per_sum[s] != 0) total += Rational(2 * per_sum[s], static_cast<std::int64_t>(s));
  }
  return total;
}

double randic_index(const Graph& g) {
  double sum = 0.0;
  double carry = 0.0;
  for (const Edge& e : g.edges()) {
    const double term =
        1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v)));
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

std::int64_t first_zagreb(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::int64_t d = g.degree(v);
    total += d * d;
  }
  return total;
}

EdgeWeight min_weight_edge(const Graph& g) {
  if (g.size() == 0) throw GraphError("min_weight_edge of an edgeless graph");
  const Edge* best = nullptr;
  int best_sum = -1;
  // Edges are stored in lexicographic order; strict comparison keeps the first.
  for (const Edge& e : g.edges()) {
    const int s = g.degree(e.u) + g.degree(e.v);
    if (s > best_sum) {
      best_sum = s;
      best = &e;
    }
  }
  return {*best, Rational(2, best_sum)};
}

}  // namespace harmonic
