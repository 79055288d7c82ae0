#include "harmonic/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "harmonic/bounds.hpp"
#include "harmonic/canonical.hpp"
#include "harmonic/constructions.hpp"
#include "harmonic/graph6.hpp"
#include "harmonic/invariants.hpp"

namespace harmonic {

namespace {

constexpr std::array<std::pair<ClaimId, std::string_view>, 7> kClaimNames{{
    {ClaimId::Cor1StarMin, "COR1_STAR_MIN"},
    {ClaimId::Cor2PathMax, "COR2_PATH_MAX"},
    {ClaimId::Eq2mOverN, "EQ_2M_OVER_N"},
    {ClaimId::EqCsM1, "EQ_CS_M1"},
    {ClaimId::LemEdgeRemoval, "LEM_EDGE_REMOVAL"},
    {ClaimId::SecMaxSpider, "SEC_MAX_SPIDER"},
    {ClaimId::Thm1PathShift, "THM1_PATH_SHIFT"},
}};

constexpr std::array<ClaimId, 7> kAllClaims{
    ClaimId::Cor1StarMin,    ClaimId::Cor2PathMax,  ClaimId::Eq2mOverN,     ClaimId::EqCsM1,
    ClaimId::LemEdgeRemoval, ClaimId::SecMaxSpider, ClaimId::Thm1PathShift,
};

// ---------------------------------------------------------------------------
// Relations, flippable for the mutant harness.

enum class Rel { Less, LessEq, Greater, GreaterEq };

Rel apply_mutant(Rel r, bool mutant) {
  if (!mutant) return r;
  switch (r) {
    case Rel::Less:
      return Rel::Greater;
    case Rel::LessEq:
      return Rel::GreaterEq;
    case Rel::Greater:
      return Rel::Less;
    case Rel::GreaterEq:
      return Rel::LessEq;
  }
  return r;
}

bool holds(const Rational& a, Rel r, const Rational& b) {
  switch (r) {
    case Rel::Less:
      return a < b;
    case Rel::LessEq:
      return a <= b;
    case Rel::Greater:
      return a > b;
    case Rel::GreaterEq:
      return a >= b;
  }
  return false;
}

std::string_view symbol(Rel r) {
  switch (r) {
    case Rel::Less:
      return "<";
    case Rel::LessEq:
      return "<=";
    case Rel::Greater:
      return ">";
    case Rel::GreaterEq:
      return ">=";
  }
  return "?";
}

InstanceOutcome violated(std::string detail) { return {true, false, std::move(detail)}; }
InstanceOutcome satisfied() { return {true, true, {}}; }

std::string relation_failure(std::string_view lhs_name, const Rational& lhs, Rel rel,
                             std::string_view rhs_name, const Rational& rhs) {
  return std::string(lhs_name) + " = " + lhs.str() + " is not " + std::string(symbol(rel)) + " " +
         std::string(rhs_name) + " = " + rhs.str();
}

std::set<std::string> long_leg_spider_forms(int n) {
  std::set<std::string> forms;
  for (int c = 2; 3 * c <= n - 1; ++c) {
    for (int b = c; c + 2 * b <= n - 1; ++b) {
      forms.insert(canonical_form(spider(SpiderSpec::make(n - 1 - b - c, b, c))));
    }
  }
  return forms;
}

// ---------------------------------------------------------------------------
// Per-instance checks

InstanceOutcome check_tree_extreme(const Graph& g, bool upper, bool mutant) {
  const int n = g.order();
  if (n < 3 || n > kCanonicalMaxOrder || !is_tree(g)) return {};
  const TreeExtremes ext = tree_extremal_values(n);
  const Rational& bound = upper ? ext.max : ext.min;
  const Rel rel = apply_mutant(upper ? Rel::LessEq : Rel::GreaterEq, mutant);
  const Rational h = harmonic_index(g);
  if (!holds(h, rel, bound)) return violated(relation_failure("H", h, rel, "bound", bound));
  const Graph family = upper ? path(n) : star(n);
  const bool is_family = canonical_form(g) == canonical_form(family);
  if ((h == bound) != is_family) {
    return violated(is_family ? "extremal family member has H = " + h.str() + " != " + bound.str()
                              : "H attains " + bound.str() + " on a tree outside the extremal family");
  }
  return satisfied();
}

InstanceOutcome check_second_max(const Graph& g, bool mutant) {
  const int n = g.order();
  if (n < 7 || n > kCanonicalMaxOrder || !is_tree(g)) return {};
  const std::string form = canonical_form(g);
  if (form == canonical_form(path(n))) return {};
  const Rational second = spider_second_max_value(n);
  const Rel rel = apply_mutant(Rel::LessEq, mutant);
  const Rational h = harmonic_index(g);
  if (!holds(h, rel, second)) return violated(relation_failure("H", h, rel, "second max", second));
  const bool spider_member = long_leg_spider_forms(n).contains(form);
  if ((h == second) != spider_member) {
    return violated(spider_member ? "spider with legs >= 2 has H = " + h.str()
                                  : "non-spider tree attains the second maximum " + second.str());
  }
  return satisfied();
}

InstanceOutcome check_edge_removal(const Graph& g, bool mutant) {
  if (g.size() == 0 || !is_connected(g)) return {};
  const EdgeWeight mw = min_weight_edge(g);
  const Vertex u = mw.edge.u;
  const Vertex v = mw.edge.v;
  if (g.degree(u) < 2 || g.degree(v) < 2) return {};
  const Graph reduced = remove_edge(g, u, v);
  if (!is_connected(reduced)) return {};
  const Rel rel = apply_mutant(Rel::Less, mutant);
  const Rational before = harmonic_index(g);
  const Rational after = harmonic_index(reduced);
  if (!holds(after, rel, before)) {
    return violated("e=(" + std::to_string(u) + "," + std::to_string(v) + ") weight " +
                    mw.weight.str() + ": " + relation_failure("H(G-e)", after, rel, "H(G)", before));
  }
  return satisfied();
}

InstanceOutcome check_path_shift(const Graph& base, const InstanceParams& at, bool mutant) {
  if (base.order() < 2 || at.w < 0 || at.w >= base.order()) return {};
  if (at.q < 1 || at.p < at.q || !is_connected(base)) return {};
  const Graph split = attach_paths({base, at.w, at.p, at.q});
  if (split.degree(at.w) < 3) return {};
  const Graph merged = attach_paths({base, at.w, at.p + at.q, 0});
  const Rel rel = apply_mutant(Rel::Less, mutant);
  const Rational h_split = harmonic_index(split);
  const Rational h_merged = harmonic_index(merged);
  if (!holds(h_split, rel, h_merged)) {
    return violated("w=" + std::to_string(at.w) + " p=" + std::to_string(at.p) +
                    " q=" + std::to_string(at.q) + ": " +
                    relation_failure("H(G(p,q))", h_split, rel, "H(G(p+q,0))", h_merged));
  }
  return satisfied();
}

InstanceOutcome check_two_m_over_n(const Graph& g, bool mutant) {
  if (g.size() == 0 || !is_connected(g) || !is_triangle_free(g)) return {};
  const BoundReport r = bound_2m_over_n(g);
  if (!r.hypothesis_holds) return {};
  const Rel rel = apply_mutant(Rel::GreaterEq, mutant);
  if (!holds(r.index_value, rel, r.bound_value)) {
    return violated(relation_failure("H", r.index_value, rel, "2m/n", r.bound_value));
  }
  if (r.equality != r.equality_condition_holds) {
    return violated("equality " + std::string(r.equality ? "holds" : "fails") +
                    " but constant degree sum n " + (r.equality_condition_holds ? "holds" : "fails"));
  }
  if (r.equality != r.complete_bipartite.value_or(false)) {
    return violated(r.equality ? "equality on a graph that is not complete bipartite"
                               : "complete bipartite graph without equality");
  }
  return satisfied();
}

InstanceOutcome check_cauchy_schwarz(const Graph& g, bool mutant) {
  if (g.size() == 0) return {};
  const BoundReport r = bound_cauchy_schwarz(g);
  const Rel rel = apply_mutant(Rel::GreaterEq, mutant);
  if (!holds(r.index_value, rel, r.bound_value)) {
    return violated(relation_failure("H", r.index_value, rel, "2m^2/M1", r.bound_value));
  }
  if (r.equality != r.equality_condition_holds) {
    return violated(r.equality ? "equality with non-constant edge degree sums"
                               : "constant edge degree sums without equality");
  }
  return satisfied();
}

// ---------------------------------------------------------------------------
// Universes

struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t violations = 0;
  std::optional<Counterexample> first;

  void record(const Graph& g, const InstanceParams& params, const InstanceOutcome& out) {
    if (!out.applicable) return;
    ++instances;
    if (out.passed) return;
    ++violations;
    if (!first) first = Counterexample{to_graph6(g), params, out.detail};
  }

  void merge(Tally&& later) {
    instances += later.instances;
    violations += later.violations;
    if (!first) first = std::move(later.first);
  }
};

unsigned worker_count(const VerifyOptions& options) {
  if (options.threads > 0) return options.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Partitions the mask space of labeled graphs into contiguous chunks, one
// task per chunk, and merges tallies in chunk order so the reported
// counterexample is the first in stream order regardless of scheduling.
template <class Visit>
Tally sweep_labeled(int n, unsigned threads, const Visit& visit) {
  const std::uint64_t total = labeled_graph_count(n);
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, total);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t;
    ConnectedGraphStream stream(n, lo, hi);
    while (auto g = stream.next()) visit(*g, t);
    return t;
  };
  if (chunks <= 1) return work(0, total);
  std::vector<std::future<Tally>> parts;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    parts.push_back(std::async(std::launch::async, work, total * c / chunks, total * (c + 1) / chunks));
  }
  Tally out;
  for (auto& f : parts) out.merge(f.get());
  return out;
}

std::string random_universe_text(const VerifyOptions& o) {
  return std::to_string(o.random_samples) + " seeded random connected graphs n=" +
         std::to_string(o.random_n_min) + ".." + std::to_string(o.random_n_max) +
         " (seed " + std::to_string(o.seed.value) + ")";
}

std::string range_text(std::string_view what, int lo, int hi) {
  return std::string(what) + " n=" + std::to_string(lo) + ".." + std::to_string(hi);
}

Tally run_random(ClaimId claim, const VerifyOptions& o) {
  Tally t;
  if (o.random_samples == 0) return t;
  for (const Graph& g : random_connected_sample(o.seed, o.random_samples, o.random_n_min, o.random_n_max)) {
    t.record(g, {}, check_instance(claim, g, {}, o.mutant));
  }
  return t;
}

void require_presence(Tally& t, bool present, const Graph& expected, std::string what) {
  if (present) return;
  ++t.violations;
  if (!t.first) t.first = Counterexample{to_graph6(expected), {}, what + " missing from the enumeration"};
}

Tally run_trees(ClaimId claim, const VerifyOptions& o, int n_min, std::string& universe) {
  Tally t;
  universe = range_text("all free trees", n_min, o.tree_n_max);
  for (int n = n_min; n <= o.tree_n_max; ++n) {
    std::set<std::string> seen;
    FreeTreeStream stream(n);
    while (auto g = stream.next()) {
      seen.insert(canonical_form(*g));
      t.record(*g, {}, check_instance(claim, *g, {}, o.mutant));
    }
    if (claim == ClaimId::Cor1StarMin) {
      require_presence(t, seen.contains(canonical_form(star(n))), star(n), "star");
    } else if (claim == ClaimId::Cor2PathMax) {
      require_presence(t, seen.contains(canonical_form(path(n))), path(n), "path");
    } else {
      for (const std::string& form : long_leg_spider_forms(n)) {
        require_presence(t, seen.contains(form), parse_graph6(form), "spider with legs >= 2");
      }
    }
  }
  return t;
}

Tally run_labeled(ClaimId claim, const VerifyOptions& o, int n_min, int n_max) {
  Tally t;
  for (int n = n_min; n <= n_max; ++n) {
    t.merge(sweep_labeled(n, worker_count(o), [&](const Graph& g, Tally& local) {
      local.record(g, {}, check_instance(claim, g, {}, o.mutant));
    }));
  }
  return t;
}

Tally run_path_shift(const VerifyOptions& o) {
  Tally t;
  for (int n = 2; n <= o.shift_base_n_max; ++n) {
    t.merge(sweep_labeled(n, worker_count(o), [&](const Graph& g, Tally& local) {
      for (Vertex w = 0; w < g.order(); ++w) {
        for (int p = 1; p <= o.shift_path_max; ++p) {
          for (int q = 1; q <= p; ++q) {
            const InstanceParams at{w, p, q};
            local.record(g, at, check_instance(ClaimId::Thm1PathShift, g, at, o.mutant));
          }
        }
      }
    }));
  }
  return t;
}

}  // namespace

std::string_view to_string(ClaimId id) {
  for (const auto& [claim, name] : kClaimNames) {
    if (claim == id) return name;
  }
  return "UNKNOWN";
}

std::optional<ClaimId> parse_claim_id(std::string_view name) {
  for (const auto& [claim, text] : kClaimNames) {
    if (text == name) return claim;
  }
  return std::nullopt;
}

std::span<const ClaimId> all_claims() { return kAllClaims; }

InstanceOutcome check_instance(ClaimId claim, const Graph& g, const InstanceParams& params,
                               bool mutant) {
  switch (claim) {
    case ClaimId::Cor1StarMin:
      return check_tree_extreme(g, false, mutant);
    case ClaimId::Cor2PathMax:
      return check_tree_extreme(g, true, mutant);
    case ClaimId::SecMaxSpider:
      return check_second_max(g, mutant);
    case ClaimId::LemEdgeRemoval:
      return check_edge_removal(g, mutant);
    case ClaimId::Thm1PathShift:
      return check_path_shift(g, params, mutant);
    case ClaimId::Eq2mOverN:
      return check_two_m_over_n(g, mutant);
    case ClaimId::EqCsM1:
      return check_cauchy_schwarz(g, mutant);
  }
  return {};
}

bool reproduces(ClaimId claim, const Counterexample& cex, bool mutant) {
  const Graph g = parse_graph6(cex.graph6);
  const InstanceOutcome out = check_instance(claim, g, cex.params, mutant);
  return out.applicable && !out.passed;
}

VerificationResult run_claim(ClaimId claim, const VerifyOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  VerificationResult result;
  result.claim = claim;
  Tally t;
  switch (claim) {
    case ClaimId::Cor1StarMin:
    case ClaimId::Cor2PathMax:
      t = run_trees(claim, o, 3, result.universe);
      break;
    case ClaimId::SecMaxSpider:
      t = run_trees(claim, o, 7, result.universe);
      break;
    case ClaimId::LemEdgeRemoval:
      t = run_labeled(claim, o, 3, o.lemma_n_max);
      t.merge(run_random(claim, o));
      result.universe = range_text("connected labeled graphs", 3, o.lemma_n_max) + " + " +
                        random_universe_text(o);
      break;
    case ClaimId::Thm1PathShift:
      t = run_path_shift(o);
      result.universe = range_text("connected labeled bases", 2, o.shift_base_n_max) +
                        ", every w, 1 <= q <= p <= " + std::to_string(o.shift_path_max);
      break;
    case ClaimId::Eq2mOverN:
      t = run_labeled(claim, o, 2, o.bipartite_n_max);
      result.universe = range_text("triangle-free connected labeled graphs", 2, o.bipartite_n_max);
      break;
    case ClaimId::EqCsM1:
      t = run_labeled(claim, o, 2, o.cs_n_max);
      t.merge(run_random(claim, o));
      result.universe = range_text("connected labeled graphs", 2, o.cs_n_max) + " + " +
                        random_universe_text(o);
      break;
  }
  result.instances = t.instances;
  result.violations = t.violations;
  result.passed = t.violations == 0;
  result.counterexample = std::move(t.first);
  result.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<VerificationResult> run_claims(std::span<const ClaimId> claims,
                                           const VerifyOptions& options) {
  std::vector<ClaimId> order(claims.begin(), claims.end());
  std::sort(order.begin(), order.end(),
            [](ClaimId a, ClaimId b) { return to_string(a) < to_string(b); });
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<VerificationResult> out;
  out.reserve(order.size());
  for (ClaimId c : order) out.push_back(run_claim(c, options));
  return out;
}

std::string_view to_string(ExtremalRank rank) {
  switch (rank) {
    case ExtremalRank::Min:
      return "min";
    case ExtremalRank::Max:
      return "max";
    case ExtremalRank::SecondMax:
      return "second_max";
  }
  return "unknown";
}

std::vector<ExtremalRecord> extremal_trees(int n_max) {
  if (n_max < 3 || n_max > 14) throw std::invalid_argument("extremal search needs 3 <= n_max <= 14");
  std::vector<ExtremalRecord> out;
  for (int n = 3; n <= n_max; ++n) {
    std::map<Rational, std::vector<std::string>> by_value;
    FreeTreeStream stream(n);
    while (auto g = stream.next()) by_value[harmonic_index(*g)].push_back(canonical_form(*g));
    auto emit = [&](ExtremalRank rank, const auto& entry) {
      ExtremalRecord rec{n, rank, entry.first, entry.second};
      std::sort(rec.attaining_set.begin(), rec.attaining_set.end());
      out.push_back(std::move(rec));
    };
    emit(ExtremalRank::Min, *by_value.begin());
    emit(ExtremalRank::Max, *by_value.rbegin());
    if (by_value.size() >= 2) emit(ExtremalRank::SecondMax, *std::next(by_value.rbegin()));
  }
  return out;
}

}  // namespace harmonic
