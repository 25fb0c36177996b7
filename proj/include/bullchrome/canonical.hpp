#pragma once

#include <string>
#include <vector>

#include "bullchrome/graph.hpp"

namespace bullchrome {

/// Largest graph the canonical labeler accepts.
inline constexpr int kCanonicalMaxVertices = 64;

/// Canonical labeling by equitable refinement plus individualization
/// backtracking, pruned with discovered automorphisms. Returns new_index with
/// new_index[v] = position of v in the canonical order; isomorphic inputs
/// yield identical permute(g, new_index). Throws CapExceeded above
/// kCanonicalMaxVertices.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

/// graph6 of the canonical form. Equal keys iff isomorphic.
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace bullchrome
