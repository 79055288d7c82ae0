#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/graph.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

enum class BoundId {
  TwoMOverN,        // H >= 2m/n when every edge has deg(u)+deg(v) <= n
  CauchySchwarzM1,  // H >= 2m^2 / M1
  TreeStarMin,      // trees: H >= 2(n-1)/n, equality iff star
  TreePathMax,      // trees: H <= 4/3 + (n-3)/2, equality iff path
};

std::string_view to_string(BoundId id);

/// One bound evaluated on one graph. `holds` and `equality` are computed even
/// when the hypothesis fails; callers only assert them under the hypothesis.
struct BoundReport {
  BoundId id = BoundId::TwoMOverN;
  bool hypothesis_holds = false;
  Rational bound_value;
  Rational index_value;
  bool holds = false;     // index >= bound (lower bounds) or <= (upper bound)
  bool equality = false;  // index == bound, exactly
  bool equality_condition_holds = false;
  /// TwoMOverN on triangle-free graphs only: is g complete bipartite?
  std::optional<bool> complete_bipartite;
};

/// Throws GraphError for n = 0.
BoundReport bound_2m_over_n(const Graph& g);
/// Throws GraphError for edgeless graphs.
BoundReport bound_cauchy_schwarz(const Graph& g);
/// Hypothesis: g is a tree on n >= 3 vertices. Throws GraphError for n = 0.
BoundReport bound_tree_star_min(const Graph& g);
/// Hypothesis: g is a tree on n >= 3 vertices. Throws GraphError for n = 0.
BoundReport bound_tree_path_max(const Graph& g);

/// Every bound that is defined on g (n >= 1; Cauchy-Schwarz needs m >= 1).
std::vector<BoundReport> all_bounds(const Graph& g);

struct TreeExtremes {
  Rational min;  // 2(n-1)/n, the star
  Rational max;  // 4/3 + (n-3)/2, the path
};

/// Throws std::invalid_argument for n < 3.
TreeExtremes tree_extremal_values(int n);

/// Common H of every spider with all three legs >= 2: 16/5 + (n-7)/2.
/// Throws std::invalid_argument for n < 7.
Rational spider_second_max_value(int n);

/// Known discrepancies between commonly quoted closed forms and the values
/// the definition of H actually produces.
struct Erratum {
  std::string id;
  std::string note;
};

const std::vector<Erratum>& errata();

}  // namespace harmonic
