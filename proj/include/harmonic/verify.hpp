#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "harmonic/enumerate.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

enum class ClaimId {
  Cor1StarMin,     // COR1_STAR_MIN
  Cor2PathMax,     // COR2_PATH_MAX
  Eq2mOverN,       // EQ_2M_OVER_N
  EqCsM1,          // EQ_CS_M1
  LemEdgeRemoval,  // LEM_EDGE_REMOVAL
  SecMaxSpider,    // SEC_MAX_SPIDER
  Thm1PathShift,   // THM1_PATH_SHIFT
};

std::string_view to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view name);
/// Every claim, sorted by its string id.
std::span<const ClaimId> all_claims();

/// Universe sizes. Defaults are the full acceptance budget.
struct VerifyOptions {
  Seed seed{1};
  int tree_n_max = 12;        // COR1, COR2 over n = 3..; SEC over n = 7..
  int lemma_n_max = 6;        // LEM exhaustive part, n = 3..
  int shift_base_n_max = 5;   // THM1 bases, n = 2..
  int shift_path_max = 4;     // THM1: 1 <= q <= p <= this
  int bipartite_n_max = 7;    // EQ_2M_OVER_N, n = 2..
  int cs_n_max = 6;           // EQ_CS_M1 exhaustive part, n = 2..
  std::size_t random_samples = 10000;
  int random_n_min = 7;
  int random_n_max = 12;
  unsigned threads = 0;       // 0: hardware concurrency
  /// Flip the direction of every claim's principal inequality; used to
  /// check that the harness can fail.
  bool mutant = false;
};

/// Extra coordinates of an instance beyond its graph (THM1 only).
struct InstanceParams {
  Vertex w = -1;
  int p = 0;
  int q = 0;

  bool operator==(const InstanceParams&) const = default;
};

struct Counterexample {
  std::string graph6;
  InstanceParams params;
  std::string detail;
};

struct VerificationResult {
  ClaimId claim = ClaimId::Cor1StarMin;
  std::string universe;
  std::uint64_t instances = 0;   // instances meeting the claim's hypothesis
  std::uint64_t violations = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // first violation in stream order
  double elapsed_ms = 0.0;
};

struct InstanceOutcome {
  bool applicable = false;  // hypothesis met
  bool passed = true;
  std::string detail;
};

/// Evaluates one claim on one instance. For THM1 `g` is the base graph and
/// `params` carries (w, p, q); other claims ignore `params`.
InstanceOutcome check_instance(ClaimId claim, const Graph& g, const InstanceParams& params,
                               bool mutant = false);

/// Re-parses a counterexample and re-runs its instance check; true when the
/// failure reproduces.
bool reproduces(ClaimId claim, const Counterexample& cex, bool mutant = false);

VerificationResult run_claim(ClaimId claim, const VerifyOptions& options);
/// Results are sorted by claim id regardless of the order requested.
std::vector<VerificationResult> run_claims(std::span<const ClaimId> claims,
                                           const VerifyOptions& options);

enum class ExtremalRank { Min, Max, SecondMax };

std::string_view to_string(ExtremalRank rank);

struct ExtremalRecord {
  int n = 0;
  ExtremalRank rank = ExtremalRank::Min;
  Rational value;
  std::vector<std::string> attaining_set;  // graph6, sorted
};

/// Min, max and second-max records of H over all free trees for each
/// n = 3..n_max (3 <= n_max <= 14). No second-max record when every tree
/// of that order has the same H.
std::vector<ExtremalRecord> extremal_trees(int n_max);

}  // namespace harmonic
