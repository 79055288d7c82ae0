#include <doctest.h>

#include "harmonic/constructions.hpp"
#include "harmonic/graph.hpp"
#include "test_helpers.hpp"

using namespace harmonic;

TEST_SUITE("graph") {
  TEST_CASE("new_graph has no edges") {
    for (int n : {0, 1, 5}) {
      const Graph g = new_graph(n);
      CHECK(g.order() == n);
      CHECK(g.size() == 0);
    }
    CHECK(degree(new_graph(1), 0) == 0);
    CHECK_THROWS_AS(new_graph(-1), GraphError);
  }

  TEST_CASE("add_edge is symmetric and rejects loops, duplicates and bad vertices") {
    const Graph k2 = add_edge(new_graph(2), 0, 1);
    CHECK(k2.size() == 1);
    CHECK(k2.has_edge(1, 0));
    CHECK(k2.edges()[0] == Edge{0, 1});
    CHECK_THROWS_AS(add_edge(k2, 0, 1), GraphError);
    CHECK_THROWS_AS(add_edge(k2, 1, 0), GraphError);
    CHECK_THROWS_AS(add_edge(new_graph(3), 2, 2), GraphError);
    CHECK_THROWS_AS(add_edge(new_graph(3), 0, 3), GraphError);
    CHECK_THROWS_AS(add_edge(new_graph(3), -1, 0), GraphError);
  }

  TEST_CASE("add_edge returns a copy") {
    const Graph g = new_graph(3);
    const Graph h = add_edge(g, 0, 2);
    CHECK(g.size() == 0);
    CHECK(h.size() == 1);
  }

  TEST_CASE("degree") {
    const Graph s5 = star(5);
    CHECK(degree(s5, 0) == 4);
    CHECK(degree(s5, 3) == 1);
    CHECK(degree(path(4), 1) == 2);
    CHECK_THROWS_AS(degree(s5, 5), GraphError);
  }

  TEST_CASE("from_edges normalizes order and rejects duplicates") {
    const std::vector<Edge> edges{{2, 1}, {0, 1}};
    const Graph g = Graph::from_edges(3, edges);
    CHECK(g == path(3));
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph::from_edges(2, dup), GraphError);
  }

  TEST_CASE("connectivity") {
    CHECK(is_connected(path(6)));
    CHECK_FALSE(is_connected(testing::disjoint_union(path(2), path(2))));
    CHECK(is_connected(new_graph(1)));
    CHECK(is_connected(new_graph(0)));
    CHECK_FALSE(is_connected(new_graph(2)));
  }

  TEST_CASE("trees") {
    CHECK(is_tree(star(7)));
    CHECK_FALSE(is_tree(cycle(5)));
    CHECK_FALSE(is_tree(testing::disjoint_union(path(2), path(2))));
    CHECK(is_tree(new_graph(1)));
  }

  TEST_CASE("triangle-free") {
    CHECK(is_triangle_free(complete_bipartite(3, 3)));
    CHECK_FALSE(is_triangle_free(complete(3)));
    CHECK(is_triangle_free(spider(SpiderSpec::make(3, 2, 1))));
    CHECK(is_triangle_free(cycle(5)));
  }

  TEST_CASE("complete bipartite recognition") {
    CHECK(is_complete_bipartite(complete_bipartite(2, 3)) == std::pair{2, 3});
    CHECK(is_complete_bipartite(complete_bipartite(4, 1)) == std::pair{1, 4});
    for (int n = 2; n <= 8; ++n) CHECK(is_complete_bipartite(star(n)) == std::pair{1, n - 1});
    CHECK_FALSE(is_complete_bipartite(path(5)));
    CHECK(is_complete_bipartite(cycle(4)) == std::pair{2, 2});
    CHECK_FALSE(is_complete_bipartite(cycle(6)));
    CHECK_FALSE(is_complete_bipartite(complete(3)));
    CHECK_FALSE(is_complete_bipartite(new_graph(1)));
    CHECK_FALSE(is_complete_bipartite(testing::disjoint_union(path(2), path(2))));
  }

  TEST_CASE("remove_edge") {
    Graph g = complete(3);
    g.remove_edge(0, 1);
    CHECK(g.size() == 2);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(g.remove_edge(0, 1), GraphError);
  }

  TEST_CASE("relabeled rejects non-permutations") {
    const std::vector<Vertex> bad{0, 0, 1};
    CHECK_THROWS_AS(path(3).relabeled(bad), GraphError);
    const std::vector<Vertex> shift{1, 2, 0};
    const Graph r = path(3).relabeled(shift);
    CHECK(r.has_edge(1, 2));
    CHECK(r.has_edge(2, 0));
  }

  TEST_CASE("property: handshake and tree implies triangle-free") {
    Xorshift64Star rng(Seed{7});
    for (int trial = 0; trial < 500; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(10));
      const Graph g = testing::random_graph(n, rng);
      std::size_t degree_sum = 0;
      for (Vertex v = 0; v < n; ++v) degree_sum += static_cast<std::size_t>(g.degree(v));
      CHECK(degree_sum == 2 * g.size());
      if (is_tree(g)) CHECK(is_triangle_free(g));
    }
    for (int n = 1; n <= 9; ++n) {
      for (const Graph& t : all_free_trees(n)) CHECK(is_triangle_free(t));
    }
  }
}
