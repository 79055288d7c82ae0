#include <doctest.h>

#include <map>
#include <set>

#include "harmonic/canonical.hpp"
#include "harmonic/constructions.hpp"
#include "harmonic/graph6.hpp"
#include "support/oracles.hpp"
#include "test_helpers.hpp"

using namespace harmonic;

namespace {

// Checks that `forms` induces the same partition as the brute-force oracle.
void check_same_partition(const std::vector<Graph>& graphs) {
  std::map<std::string, std::string> oracle_to_form;
  std::map<std::string, std::string> form_to_oracle;
  for (const Graph& g : graphs) {
    const std::string form = canonical_form(g);
    const std::string ref = oracle::brute_force_canonical(g);
    auto [a, fresh_a] = oracle_to_form.emplace(ref, form);
    auto [b, fresh_b] = form_to_oracle.emplace(form, ref);
    CAPTURE(to_graph6(g));
    CHECK(a->second == form);
    CHECK(b->second == ref);
  }
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("relabeled paths share a form; star and path differ") {
    const std::vector<Vertex> perm{2, 0, 3, 1};
    CHECK(canonical_form(path(4)) == canonical_form(path(4).relabeled(perm)));
    CHECK(canonical_form(star(4)) != canonical_form(path(4)));
  }

  TEST_CASE("all six relabelings of P_3 give one form") {
    std::vector<Vertex> perm{0, 1, 2};
    std::set<std::string> forms;
    std::set<std::string> labeled;
    do {
      const Graph g = path(3).relabeled(perm);
      labeled.insert(to_graph6(g));
      forms.insert(canonical_form(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(labeled.size() == 3);
    CHECK(forms.size() == 1);
  }

  TEST_CASE("form is a graph6 string of an isomorphic graph") {
    const Graph g = spider(SpiderSpec::make(3, 2, 2));
    const Graph h = parse_graph6(canonical_form(g));
    CHECK(h.order() == g.order());
    CHECK(h.size() == g.size());
    CHECK(canonical_form(h) == canonical_form(g));
    const Graph c = parse_graph6(canonical_form(cycle(6)));
    CHECK(canonical_form(c) == canonical_form(cycle(6)));
  }

  TEST_CASE("agrees with brute-force minimization on every labeled graph up to n = 5") {
    for (int n = 0; n <= 5; ++n) {
      std::vector<Graph> graphs;
      const std::uint64_t total = labeled_graph_count(n);
      for (std::uint64_t mask = 0; mask < total; ++mask) graphs.push_back(labeled_graph_from_mask(n, mask));
      check_same_partition(graphs);
    }
  }

  TEST_CASE("agrees with brute-force minimization on random graphs at n = 6, 7") {
    Xorshift64Star rng(Seed{3});
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 6 + static_cast<int>(rng.below(2));
      const Graph g = testing::random_graph(n, rng);
      graphs.push_back(g);
      graphs.push_back(g.relabeled(testing::random_permutation(n, rng)));
    }
    check_same_partition(graphs);
  }

  TEST_CASE("property: invariant under random relabeling, n <= 8") {
    Xorshift64Star rng(Seed{5});
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = 1 + static_cast<int>(rng.below(8));
      const Graph g = testing::random_graph(n, rng);
      const Graph h = g.relabeled(testing::random_permutation(n, rng));
      CHECK(canonical_form(g) == canonical_form(h));
    }
  }

  TEST_CASE("symmetric graphs up to n = 16 finish and are invariant") {
    Xorshift64Star rng(Seed{9});
    for (const Graph& g : {complete(16), star(16), complete_bipartite(8, 8), cycle(16), path(16),
                           complete_bipartite(1, 15)}) {
      const Graph h = g.relabeled(testing::random_permutation(g.order(), rng));
      CHECK(canonical_form(g) == canonical_form(h));
    }
    CHECK(canonical_form(cycle(16)) != canonical_form(complete_bipartite(8, 8)));
  }

  TEST_CASE("n > 16 is rejected") { CHECK_THROWS_AS(canonical_form(path(17)), GraphError); }
}
