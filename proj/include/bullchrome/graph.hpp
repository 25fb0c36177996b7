#pragma once

#include <utility>
#include <vector>

#include "bullchrome/vertex_set.hpp"

namespace bullchrome {

/// Immutable simple undirected graph on vertices 0..n-1 with bitset rows.
/// Build one with GraphBuilder or one of the named constructors below.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const;
  bool empty() const { return n_ == 0; }

  /// Throws InvalidArgument when u or v is out of range.
  bool adjacent(int u, int v) const;
  /// N(v). Throws InvalidArgument when v is out of range.
  const VertexSet& neighbors(int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }
  /// Edges (u, v) with u < v in ascending order.
  std::vector<std::pair<int, int>> edges() const;

  /// Unchecked row access for hot loops.
  const VertexSet& row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

class GraphBuilder {
 public:
  /// Throws InvalidArgument for n < 0 or n > kMaxVertices.
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  /// Throws InvalidArgument on loops or out-of-range endpoints.
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int vertex_count() const { return g_.n_; }

  Graph build() const { return g_; }

 private:
  void check(int u, int v) const;
  Graph g_;
};

/// Induced subgraph together with the map from new indices back to the parent.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;
};

/// Vertices of s keep their relative order. Throws InvalidArgument if s
/// contains a vertex outside g.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

VertexSet neighbors(const Graph& g, int v);
/// V(g) minus N(v) minus v.
VertexSet non_neighbors(const Graph& g, int v);

bool is_connected(const Graph& g);
/// Connected components of the subgraph induced by `within`, ordered by
/// least member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);

/// Distance layers from v: result[r] holds the vertices at distance exactly r.
/// Throws PreconditionError on disconnected input.
std::vector<VertexSet> bfs_layers(const Graph& g, int v);

Graph complement(const Graph& g);
/// Vertices of g2 follow those of g1.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Relabels: vertex v of g becomes new_index[v].
Graph permute(const Graph& g, const std::vector<int>& new_index);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
/// Path 0-1-2-3 plus vertex 4 adjacent to 1 and 2.
Graph bull_graph();

}  // namespace bullchrome
