#include "harmonic/report.hpp"

#include <cstdio>

#include "harmonic/graph6.hpp"
#include "harmonic/invariants.hpp"

namespace harmonic {

using nlohmann::json;

namespace {

json warnings() {
  json out = json::array();
  for (const Erratum& e : errata()) out.push_back({{"id", e.id}, {"note", e.note}});
  return out;
}

}  // namespace

json to_json(const Rational& r) { return {{"exact", r.str()}, {"decimal", r.decimal()}}; }

json to_json(const BoundReport& r) {
  json j{
      {"bound_id", to_string(r.id)},
      {"hypothesis_holds", r.hypothesis_holds},
      {"bound_value", to_json(r.bound_value)},
      {"index_value", to_json(r.index_value)},
      {"holds", r.holds},
      {"equality", r.equality},
      {"equality_condition_holds", r.equality_condition_holds},
  };
  if (r.complete_bipartite) j["complete_bipartite"] = *r.complete_bipartite;
  return j;
}

json to_json(const VerificationResult& r) {
  json j{
      {"claim_id", to_string(r.claim)},
      {"universe", r.universe},
      {"instances", r.instances},
      {"violations", r.violations},
      {"passed", r.passed},
      {"elapsed_ms", r.elapsed_ms},
  };
  if (r.counterexample) {
    json cex{{"graph6", r.counterexample->graph6}, {"detail", r.counterexample->detail}};
    const InstanceParams& p = r.counterexample->params;
    if (p.w >= 0) cex["params"] = {{"w", p.w}, {"p", p.p}, {"q", p.q}};
    j["counterexample"] = std::move(cex);
  }
  return j;
}

json to_json(const ExtremalRecord& r) {
  return {
      {"n", r.n},
      {"rank", to_string(r.rank)},
      {"value", to_json(r.value)},
      {"attaining_set", r.attaining_set},
  };
}

json graph_report(const Graph& g) {
  json bounds = json::array();
  for (const BoundReport& b : all_bounds(g)) bounds.push_back(to_json(b));
  char randic[64];
  std::snprintf(randic, sizeof randic, "%.15g", randic_index(g));
  json j{
      {"n", g.order()},
      {"m", g.size()},
      {"harmonic", to_json(harmonic_index(g))},
      {"randic", randic},
      {"first_zagreb", first_zagreb(g)},
      {"connected", is_connected(g)},
      {"triangle_free", is_triangle_free(g)},
      {"bounds", std::move(bounds)},
  };
  if (g.order() <= kGraph6MaxOrder) j["graph6"] = to_graph6(g);
  return j;
}

json verification_report(std::span<const VerificationResult> results) {
  json list = json::array();
  bool all_passed = true;
  for (const auto& r : results) {
    list.push_back(to_json(r));
    all_passed = all_passed && r.passed;
  }
  return {{"passed", all_passed}, {"results", std::move(list)}, {"warnings", warnings()}};
}

json extremal_report(std::span<const ExtremalRecord> records) {
  json list = json::array();
  for (const auto& r : records) list.push_back(to_json(r));
  return {{"records", std::move(list)}, {"warnings", warnings()}};
}

}  // namespace harmonic
