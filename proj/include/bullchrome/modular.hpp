#pragma once

#include <optional>
#include <vector>

#include "bullchrome/graph.hpp"

namespace bullchrome {

/// Smallest module of g[within] containing `seed` (seed must be non-empty and
/// inside `within`): seed closed under adding splitters.
VertexSet module_closure(const Graph& g, const VertexSet& within, const VertexSet& seed);

bool is_homogeneous_set(const Graph& g, const VertexSet& x);

/// A minimum-size homogeneous set, the lexicographically least among those of
/// that size; nullopt iff g is prime (every graph on <= 2 vertices is prime).
std::optional<VertexSet> find_homogeneous_set(const Graph& g);
bool is_prime(const Graph& g);

enum class NodeKind { leaf, parallel, series, prime };

const char* to_string(NodeKind kind);

/// Modular decomposition tree. `vertices` are original vertex indices in
/// ascending order; children are ordered by least vertex and `quotient` has
/// one vertex per child in that order (edgeless for parallel nodes, complete
/// for series nodes, prime for prime nodes).
struct ModularTree {
  NodeKind kind = NodeKind::leaf;
  std::vector<int> vertices;
  std::vector<ModularTree> children;
  Graph quotient;

  /// Least vertex of each child; they induce a copy of the quotient.
  std::vector<int> representatives() const;
  int leaf_count() const { return static_cast<int>(vertices.size()); }
  int depth() const;
};

ModularTree modular_decomposition(const Graph& g);

/// Rebuilds the graph by substituting every child into its quotient vertex.
/// Vertex labels follow the original indices stored in the tree.
Graph recompose(const ModularTree& tree);

/// Substitutes g2 for vertex x of g1. The vertices of g2 occupy positions
/// x..x+|g2|-1 and the vertices of g1 after x shift up, so substituting K_1
/// returns g1 and substituting into K_1 returns g2 unchanged. Throws
/// InvalidArgument for x out of range or empty g2.
Graph substitute(const Graph& g1, int x, const Graph& g2);

struct LayerLemmaViolation {
  int layer = 0;
  std::vector<int> subgraph;  // vertices of the prime induced subgraph H
  int x = 0;                  // vertex of the previous layer
};

/// For every layer r >= 1 of the BFS layering from v, every prime induced
/// subgraph H of L_r with |H| <= size_cap and every x in L_{r-1}: records x
/// unless N_H(x) = V(H) or N_H(x) is stable. Rejects disconnected or
/// non-bull-free input with PreconditionError.
std::vector<LayerLemmaViolation> check_layer_lemma(const Graph& g, int v, int size_cap);

}  // namespace bullchrome
