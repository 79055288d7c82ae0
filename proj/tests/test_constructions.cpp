#include <doctest.h>

#include "harmonic/canonical.hpp"
#include "harmonic/constructions.hpp"
#include "harmonic/invariants.hpp"
#include "support/oracles.hpp"
#include "test_helpers.hpp"

using namespace harmonic;

TEST_SUITE("constructions") {
  TEST_CASE("families coincide at n = 2") {
    CHECK(path(2) == star(2));
    CHECK(star(2) == complete_bipartite(1, 1));
    CHECK(path(2) == complete(2));
  }

  TEST_CASE("labelings") {
    CHECK(path(4).has_edge(2, 3));
    CHECK(star(5).degree(0) == 4);
    const Graph k = complete_bipartite(2, 3);
    CHECK(k.has_edge(1, 4));
    CHECK_FALSE(k.has_edge(0, 1));
    CHECK_FALSE(k.has_edge(2, 3));
  }

  TEST_CASE("non-positive sizes are rejected") {
    CHECK_THROWS_AS(path(0), GraphError);
    CHECK_THROWS_AS(star(-1), GraphError);
    CHECK_THROWS_AS(complete_bipartite(0, 3), GraphError);
    CHECK_THROWS_AS(SpiderSpec::make(2, 0, 1), GraphError);
    CHECK_THROWS_AS(cycle(2), GraphError);
  }

  TEST_CASE("family H values") {
    for (int n = 3; n <= 12; ++n) CHECK(harmonic_index(star(n)) == Rational(2 * (n - 1), n));
    for (int a = 1; a <= 6; ++a) {
      for (int b = a; b <= 6; ++b) {
        CHECK(harmonic_index(complete_bipartite(a, b)) == Rational(2 * a * b, a + b));
      }
    }
  }

  TEST_CASE("spiders") {
    CHECK(canonical_form(spider(SpiderSpec::make(1, 1, 1))) == canonical_form(star(4)));
    const Graph s = spider(SpiderSpec::make(2, 3, 1));
    CHECK(s.order() == 7);
    CHECK(is_tree(s));
    int branching = 0;
    for (Vertex v = 0; v < s.order(); ++v) branching += s.degree(v) == 3;
    CHECK(branching == 1);
    CHECK(SpiderSpec::make(1, 3, 2) == SpiderSpec{3, 2, 1});
    CHECK(spider(SpiderSpec{1, 2, 3}) == spider(SpiderSpec{3, 2, 1}));
    CHECK(harmonic_index(spider(SpiderSpec::make(2, 2, 2))) == Rational(16, 5));
  }

  TEST_CASE("spiders with legs >= 2 share 16/5 + (n-7)/2") {
    for (int n = 7; n <= 14; ++n) {
      for (int c = 2; 3 * c <= n - 1; ++c) {
        for (int b = c; c + 2 * b <= n - 1; ++b) {
          const Graph g = spider(SpiderSpec::make(n - 1 - b - c, b, c));
          CHECK(oracle::naive_harmonic(g) == Rational(16, 5) + Rational(n - 7, 2));
        }
      }
    }
  }

  TEST_CASE("spider cases increase with leg balance, n = 7..12") {
    for (int n = 7; n <= 12; ++n) {
      const Rational one_long = harmonic_index(spider(SpiderSpec::make(n - 3, 1, 1)));
      const Rational two_long = harmonic_index(spider(SpiderSpec::make(n - 4, 2, 1)));
      const Rational three_long = harmonic_index(spider(SpiderSpec::make(n - 5, 2, 2)));
      CHECK(harmonic_index(star(n)) < one_long);
      CHECK(one_long < two_long);
      CHECK(two_long < three_long);
      CHECK(three_long < harmonic_index(path(n)));
    }
  }

  TEST_CASE("attach_paths") {
    const Graph k3 = complete(3);
    CHECK(attach_paths({k3, 0, 0, 0}) == k3);
    const Graph g21 = attach_paths({k3, 0, 2, 1});
    CHECK(g21.order() == 6);
    CHECK(g21.degree(0) == 4);
    CHECK(g21.has_edge(0, 3));
    CHECK(g21.has_edge(3, 4));
    CHECK(g21.has_edge(0, 5));
    CHECK(attach_paths({k3, 1, 3, 0}).degree(1) == 3);

    const Graph g11 = attach_paths({k3, 0, 1, 1});
    CHECK(harmonic_index(g11) == oracle::naive_harmonic(g11));
    CHECK(harmonic_index(g11) == Rational(59, 30));

    CHECK_THROWS_AS(attach_paths({k3, 3, 1, 1}), GraphError);
    CHECK_THROWS_AS(attach_paths({new_graph(1), 0, 1, 1}), GraphError);
    CHECK_THROWS_AS(attach_paths({new_graph(3), 0, 1, 1}), GraphError);
    CHECK_THROWS_AS(attach_paths({k3, 0, -1, 1}), GraphError);
  }

  TEST_CASE("property: attach degree bookkeeping and p/q symmetry") {
    for (int n = 2; n <= 4; ++n) {
      for (const Graph& base : all_connected_labeled_graphs(n)) {
        for (Vertex w = 0; w < n; ++w) {
          for (int p = 0; p <= 3; ++p) {
            for (int q = 0; q <= 3; ++q) {
              const Graph g = attach_paths({base, w, p, q});
              CHECK(g.degree(w) == base.degree(w) + (p > 0) + (q > 0));
              CHECK(g.order() == n + p + q);
              CHECK(canonical_form(g) == canonical_form(attach_paths({base, w, q, p})));
            }
          }
        }
      }
    }
  }

  TEST_CASE("remove_edge") {
    CHECK(canonical_form(remove_edge(complete(3), 0, 1)) == canonical_form(path(3)));
    CHECK(canonical_form(remove_edge(cycle(4), 2, 3)) == canonical_form(path(4)));
    const Graph split = remove_edge(path(3), 0, 1);
    CHECK_FALSE(is_connected(split));
    CHECK(split.order() == 3);
    CHECK_THROWS_AS(remove_edge(path(3), 0, 2), GraphError);
    const Graph k3 = complete(3);
    CHECK(remove_edge(k3, 0, 1).size() == 2);
    CHECK(k3.size() == 3);
  }
}
