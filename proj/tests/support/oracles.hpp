#pragma once

// Slow, obviously-correct reference implementations used only by tests.
// They work on plain bitmask adjacency and share no algorithm with the
// library: everything is exhaustive search over subsets or assignments.

#include <cstdint>
#include <vector>

#include "bullchrome/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Small {
  int n = 0;
  std::vector<Mask> adj;
  bool adjacent(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1U; }
};

/// Requires at most 20 vertices.
Small from(const bullchrome::Graph& g);
/// Labeled graph on n vertices from an upper-triangle edge mask, bit index
/// in pair order (0,1), (0,2), ..., (1,2), ...
Small from_edge_mask(int n, std::uint64_t mask);
bullchrome::Graph to_graph(const Small& s);

bool is_clique(const Small& g, Mask s);
bool is_stable(const Small& g, Mask s);

/// omega of every induced subgraph, indexed by vertex mask.
std::vector<int> omega_all(const Small& g);
/// chi of every induced subgraph, indexed by vertex mask (stable-set DP).
std::vector<int> chi_all(const Small& g);

/// chi by plain backtracking over k = 0, 1, ... in vertex order.
int chi_backtracking(const Small& g);
/// Is there a proper coloring with k colors (plain backtracking)?
bool k_colorable(const Small& g, int k);

/// chi(H) = omega(H) for every induced subgraph H.
bool perfect_by_definition(const Small& g);

/// Every 5-tuple checked against the bull's adjacency pattern.
bool has_bull(const Small& g);
bool has_triangle(const Small& g);

/// Every subset X with 1 < |X| < n checked for splitters.
bool is_module(const Small& g, Mask x);
std::vector<Mask> homogeneous_sets(const Small& g);
bool prime_by_definition(const Small& g);

/// max chi over all triangle-free induced subgraphs (1 for the empty graph).
int t_by_definition(const Small& g);

/// All-pairs distances by Floyd-Warshall; -1 for unreachable.
std::vector<std::vector<int>> distances(const Small& g);

/// Number of isomorphism classes on n <= 6 vertices: every labeled graph,
/// minimized over all n! relabelings.
int isomorphism_class_count(int n, bool (*keep)(const Small&) = nullptr);

/// Isomorphism by trying every permutation (n <= 9).
bool isomorphic_brute(const Small& a, const Small& b);

}  // namespace oracle
