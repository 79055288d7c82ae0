#include <doctest.h>

#include "harmonic/bounds.hpp"
#include "harmonic/constructions.hpp"
#include "harmonic/invariants.hpp"

using namespace harmonic;

TEST_SUITE("bounds") {
  TEST_CASE("2m/n on K_{2,3}: equality, complete bipartite") {
    const BoundReport r = bound_2m_over_n(complete_bipartite(2, 3));
    CHECK(r.id == BoundId::TwoMOverN);
    CHECK(r.hypothesis_holds);
    CHECK(r.index_value == Rational(12, 5));
    CHECK(r.bound_value == Rational(12, 5));
    CHECK(r.holds);
    CHECK(r.equality);
    CHECK(r.equality_condition_holds);
    CHECK(r.complete_bipartite == true);
  }

  TEST_CASE("2m/n on P_5: strict") {
    const BoundReport r = bound_2m_over_n(path(5));
    CHECK(r.hypothesis_holds);
    CHECK(r.index_value == Rational(7, 3));
    CHECK(r.bound_value == Rational(8, 5));
    CHECK(r.holds);
    CHECK_FALSE(r.equality);
    CHECK_FALSE(r.equality_condition_holds);
    CHECK(r.complete_bipartite == false);
  }

  TEST_CASE("2m/n on K_4: hypothesis fails, no bipartite cross-check") {
    const BoundReport r = bound_2m_over_n(complete(4));
    CHECK_FALSE(r.hypothesis_holds);
    CHECK_FALSE(r.complete_bipartite.has_value());
    CHECK_THROWS_AS(bound_2m_over_n(new_graph(0)), GraphError);
  }

  TEST_CASE("Cauchy-Schwarz examples") {
    const BoundReport c6 = bound_cauchy_schwarz(cycle(6));
    CHECK(c6.index_value == Rational(3));
    CHECK(c6.bound_value == Rational(3));
    CHECK(c6.equality);
    CHECK(c6.equality_condition_holds);

    const BoundReport s5 = bound_cauchy_schwarz(star(5));
    CHECK(s5.index_value == Rational(8, 5));
    CHECK(s5.bound_value == Rational(8, 5));
    CHECK(s5.equality);
    CHECK(s5.equality_condition_holds);

    const BoundReport p4 = bound_cauchy_schwarz(path(4));
    CHECK(p4.index_value == Rational(11, 6));
    CHECK(p4.bound_value == Rational(9, 5));
    CHECK(p4.holds);
    CHECK_FALSE(p4.equality);
    CHECK_FALSE(p4.equality_condition_holds);

    CHECK_THROWS_AS(bound_cauchy_schwarz(new_graph(3)), GraphError);
  }

  TEST_CASE("tree extremal values") {
    const TreeExtremes t3 = tree_extremal_values(3);
    CHECK(t3.min == Rational(4, 3));
    CHECK(t3.max == Rational(4, 3));
    const TreeExtremes t4 = tree_extremal_values(4);
    CHECK(t4.min == Rational(3, 2));
    CHECK(t4.max == Rational(11, 6));
    CHECK(t4.max == harmonic_index(path(4)));
    const TreeExtremes t12 = tree_extremal_values(12);
    CHECK(t12.min == Rational(11, 6));
    CHECK(t12.max == Rational(35, 6));
    CHECK_THROWS(tree_extremal_values(2));
    for (int n = 3; n <= 16; ++n) {
      CHECK(tree_extremal_values(n).min == harmonic_index(star(n)));
      CHECK(tree_extremal_values(n).max == harmonic_index(path(n)));
    }
  }

  TEST_CASE("the (n-3)/4 coefficient does not describe H(P_n)") {
    for (int n = 4; n <= 12; ++n) {
      CHECK(harmonic_index(path(n)) != Rational(4, 3) + Rational(n - 3, 4));
    }
    CHECK(errata().size() == 2);
  }

  TEST_CASE("second-maximum spider value") {
    CHECK(spider_second_max_value(7) == Rational(16, 5));
    CHECK(spider_second_max_value(8) == Rational(37, 10));
    CHECK(spider_second_max_value(8) == harmonic_index(spider(SpiderSpec::make(3, 2, 2))));
    CHECK(spider_second_max_value(7) < harmonic_index(path(7)));
    CHECK(harmonic_index(path(7)) == Rational(10, 3));
    CHECK_THROWS(spider_second_max_value(6));
  }

  TEST_CASE("tree bound reports") {
    const BoundReport s = bound_tree_star_min(star(6));
    CHECK(s.hypothesis_holds);
    CHECK(s.equality);
    CHECK(s.equality_condition_holds);
    const BoundReport p = bound_tree_path_max(path(6));
    CHECK(p.hypothesis_holds);
    CHECK(p.equality);
    CHECK(p.equality_condition_holds);
    const BoundReport c = bound_tree_path_max(cycle(6));
    CHECK_FALSE(c.hypothesis_holds);
    CHECK_FALSE(c.equality_condition_holds);
    CHECK(all_bounds(path(5)).size() == 4);
    CHECK(all_bounds(new_graph(3)).size() == 3);
    CHECK(all_bounds(new_graph(0)).empty());
  }

  TEST_CASE("Cauchy-Schwarz equality on constant-degree-sum families") {
    for (int n = 3; n <= 10; ++n) {
      CHECK(bound_cauchy_schwarz(cycle(n)).equality);
      CHECK(bound_cauchy_schwarz(complete(n)).equality);
      CHECK(bound_cauchy_schwarz(star(n)).equality);
    }
    for (int a = 1; a <= 5; ++a) {
      for (int b = a; b <= 5; ++b) CHECK(bound_cauchy_schwarz(complete_bipartite(a, b)).equality);
    }
  }
}
