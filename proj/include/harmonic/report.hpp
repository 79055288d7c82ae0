#pragma once

#include <span>

#include <json.hpp>

#include "harmonic/bounds.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/verify.hpp"

namespace harmonic {

// Rationals serialize as {"exact": "p/q", "decimal": "<15 significant digits>"}.
nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const VerificationResult& r);
nlohmann::json to_json(const ExtremalRecord& r);

/// Everything `compute` prints for one graph: n, m, H, R, M1, connectivity,
/// triangle-freeness and every applicable bound.
nlohmann::json graph_report(const Graph& g);

/// Verification run document: {"results": [...], "warnings": [...]}.
nlohmann::json verification_report(std::span<const VerificationResult> results);
/// Extremal run document: {"records": [...], "warnings": [...]}.
nlohmann::json extremal_report(std::span<const ExtremalRecord> records);

}  // namespace harmonic
