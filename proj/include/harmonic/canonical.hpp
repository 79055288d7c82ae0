#pragma once

#include <string>

#include "harmonic/graph.hpp"

namespace harmonic {

inline constexpr int kCanonicalMaxOrder = 16;

/// Isomorphism-class certificate: the graph6 string of a canonical
/// relabeling of g. Two graphs get the same string iff they are isomorphic.
///
/// Trees are labeled in preorder of their centroid-rooted AHU encoding;
/// other graphs by an individualization/refinement search that keeps the
/// lexicographically smallest graph6 over all leaves of the search tree.
/// Throws GraphError for n > kCanonicalMaxOrder.
std::string canonical_form(const Graph& g);

}  // namespace harmonic
