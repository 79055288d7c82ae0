#include "harmonic/bounds.hpp"

#include <stdexcept>

#include "harmonic/invariants.hpp"

namespace harmonic {

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::TwoMOverN:
      return "TWO_M_OVER_N";
    case BoundId::CauchySchwarzM1:
      return "CAUCHY_SCHWARZ_M1";
    case BoundId::TreeStarMin:
      return "TREE_STAR_MIN";
    case BoundId::TreePathMax:
      return "TREE_PATH_MAX";
  }
  return "UNKNOWN";
}

namespace {

BoundReport lower_bound(BoundId id, Rational bound, Rational index) {
  BoundReport r;
  r.id = id;
  r.holds = index >= bound;
  r.equality = index == bound;
  r.bound_value = std::move(bound);
  r.index_value = std::move(index);
  return r;
}

bool is_star_tree(const Graph& g) { return is_tree(g) && max_degree(g) == g.order() - 1; }
bool is_path_tree(const Graph& g) { return is_tree(g) && max_degree(g) <= 2; }

}  // namespace

BoundReport bound_2m_over_n(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw GraphError("2m/n bound is undefined for the empty graph");
  BoundReport r = lower_bound(BoundId::TwoMOverN,
                              Rational(2 * static_cast<std::int64_t>(g.size()), n),
                              harmonic_index(g));
  r.hypothesis_holds = true;
  r.equality_condition_holds = true;
  for (const Edge& e : g.edges()) {
    const int s = g.degree(e.u) + g.degree(e.v);
    if (s > n) r.hypothesis_holds = false;
    if (s != n) r.equality_condition_holds = false;
  }
  if (is_triangle_free(g)) r.complete_bipartite = is_complete_bipartite(g).has_value();
  return r;
}

BoundReport bound_cauchy_schwarz(const Graph& g) {
  if (g.size() == 0) throw GraphError("Cauchy-Schwarz bound needs at least one edge");
  const auto m = static_cast<std::int64_t>(g.size());
  BoundReport r = lower_bound(BoundId::CauchySchwarzM1, Rational(2 * m * m, first_zagreb(g)),
                              harmonic_index(g));
  r.hypothesis_holds = true;
  r.equality_condition_holds = true;
  const Edge& first = g.edges().front();
  const int s0 = g.degree(first.u) + g.degree(first.v);
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) + g.degree(e.v) != s0) r.equality_condition_holds = false;
  }
  return r;
}

BoundReport bound_tree_star_min(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw GraphError("tree bounds are undefined for the empty graph");
  BoundReport r = lower_bound(BoundId::TreeStarMin, Rational(2 * (n - 1), n), harmonic_index(g));
  r.hypothesis_holds = n >= 3 && is_tree(g);
  r.equality_condition_holds = is_star_tree(g);
  return r;
}

BoundReport bound_tree_path_max(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw GraphError("tree bounds are undefined for the empty graph");
  BoundReport r;
  r.id = BoundId::TreePathMax;
  r.bound_value = Rational(4, 3) + Rational(n - 3, 2);
  r.index_value = harmonic_index(g);
  r.holds = r.index_value <= r.bound_value;
  r.equality = r.index_value == r.bound_value;
  r.hypothesis_holds = n >= 3 && is_tree(g);
  r.equality_condition_holds = is_path_tree(g);
  return r;
}

std::vector<BoundReport> all_bounds(const Graph& g) {
  std::vector<BoundReport> out;
  if (g.order() == 0) return out;
  out.push_back(bound_2m_over_n(g));
  if (g.size() > 0) out.push_back(bound_cauchy_schwarz(g));
  out.push_back(bound_tree_star_min(g));
  out.push_back(bound_tree_path_max(g));
  return out;
}

TreeExtremes tree_extremal_values(int n) {
  if (n < 3) throw std::invalid_argument("tree extremal values need n >= 3");
  return {Rational(2 * (n - 1), n), Rational(4, 3) + Rational(n - 3, 2)};
}

Rational spider_second_max_value(int n) {
  if (n < 7) throw std::invalid_argument("second-maximum spider value needs n >= 7");
  return Rational(16, 5) + Rational(n - 7, 2);
}

const std::vector<Erratum>& errata() {
  static const std::vector<Erratum> notes{
      {"TREE_PATH_MAX_COEFFICIENT",
       "tree upper bound 4/3 + (n-3)/4 does not match H(P_n); H(P_4) = 11/6. "
       "Checked value: 4/3 + (n-3)/2."},
      {"SPIDER_VALUES_HALVED",
       "closed forms 1/5+2/4+1/3+(n-5)/4, 2/5+2/3+1/4+(n-6)/4 and 3/5+3/3+(n-7)/4 for T(a,b,c) "
       "are half of the direct edge sums; with legs >= 2 the checked value is 16/5 + (n-7)/2."},
  };
  return notes;
}

}  // namespace harmonic
