#pragma once

#include <vector>

#include "bullchrome/coloring.hpp"
#include "bullchrome/graph.hpp"

namespace bullchrome {

/// BFS layering from a root together with the propagated stable-set cover.
/// families[a][b] (a >= 1, 0 <= b < omega) is the b-th set of layer a:
/// for a = 1 the color classes of an optimal coloring of N(root) padded with
/// empty sets, for a >= 2 the vertices of L_a with a neighbor in
/// families[a-1][b]. families[0] is empty.
struct LayerDecomposition {
  int root = 0;
  int omega = 0;
  std::vector<VertexSet> layers;
  std::vector<std::vector<VertexSet>> families;

  /// families[a] made disjoint: each vertex of L_a kept only in the set with
  /// the least index b containing it.
  std::vector<VertexSet> partition(int a) const;
};

/// Requires g connected (PreconditionError) and N(v) perfect
/// (CertificationError from color_perfect, with the hole).
LayerDecomposition build_layer_decomposition(const Graph& g, int v);

struct NPerfectOptions {
  /// Verify bull-freeness, N-perfection and t (when small) up front.
  bool check_preconditions = true;
  /// Largest graph on which t is cross-checked against t_parameter.
  int t_check_cap = 14;
  /// Cap for exact chromatic numbers of triangle-free prime pieces; larger
  /// pieces fall back to a t-coloring decision search.
  int exact_cap = kDefaultExactChromaticCap;
};

/// Colors an N-perfect bull-free graph whose triangle-free induced subgraphs
/// are t-colorable, following the inductive argument behind
/// chi <= omega^(2 log t + 5):
///   components share a palette; omega <= 1 takes one color; if some u has
///   V \ N(u) perfect, N(u) is colored recursively and V \ N(u) optimally on a
///   fresh palette; otherwise the graph is layered from its least vertex, every
///   propagated set S^r_b is colored through its modular decomposition (prime
///   pieces dominated from the previous layer are perfect, the rest are
///   triangle-free), sets of one layer get disjoint palettes and layers
///   alternate between two palettes.
/// The account records every stage against its budget.
StagedColoring color_nperfect(const Graph& g, int t, const NPerfectOptions& options = {});

/// Colors any bull-free graph in the class: modular decomposition, each prime
/// quotient colored by color_nperfect, lifted by compose_coloring. The root
/// budget is omega^(4 log t + 13).
StagedColoring color_bull_free(const Graph& g, int t, const NPerfectOptions& options = {});

}  // namespace bullchrome
