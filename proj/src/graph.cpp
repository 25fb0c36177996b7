#include "bullchrome/graph.hpp"

#include <string>

#include "bullchrome/errors.hpp"

namespace bullchrome {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for graph on " +
                          std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::empty_input: return "empty input";
    case ParseErrorKind::malformed_header: return "malformed header";
    case ParseErrorKind::invalid_character: return "invalid character";
    case ParseErrorKind::length_mismatch: return "length mismatch";
    case ParseErrorKind::trailing_bits: return "nonzero trailing bits";
    case ParseErrorKind::malformed_edgelist: return "malformed edge list";
  }
  return "parse error";
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : adj_) twice += r.size();
  return twice / 2;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  return adj_[static_cast<std::size_t>(u)].contains(v);
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(*this, v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : row(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxVertices) + "]");
  g_.n_ = n;
  g_.adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check(int u, int v) const {
  check_vertex(g_, u);
  check_vertex(g_, v);
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check(u, v);
  g_.adj_[static_cast<std::size_t>(u)].insert(v);
  g_.adj_[static_cast<std::size_t>(v)].insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check(u, v);
  g_.adj_[static_cast<std::size_t>(u)].erase(v);
  g_.adj_[static_cast<std::size_t>(v)].erase(u);
  return *this;
}

bool GraphBuilder::adjacent(int u, int v) const { return g_.adjacent(u, v); }

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  for (int v : vertices) check_vertex(g, v);
  const int k = static_cast<int>(vertices.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.row(vertices[static_cast<std::size_t>(i)]).contains(vertices[static_cast<std::size_t>(j)]))
        b.add_edge(i, j);
  return {b.build(), vertices};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices()))
    throw InvalidArgument("vertex " + std::to_string(s.last()) + " out of range for graph on " +
                          std::to_string(g.vertex_count()) + " vertices");
  return induced_subgraph(g, s.to_vector());
}

VertexSet neighbors(const Graph& g, int v) { return g.neighbors(v); }

VertexSet non_neighbors(const Graph& g, int v) {
  VertexSet s = g.vertices() - g.neighbors(v);
  s.erase(v);
  return s;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (!left.empty()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.insert(left.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next;
      for (int v : frontier) next |= g.row(v);
      next &= left;
      next -= comp;
      frontier = next;
    }
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<VertexSet> bfs_layers(const Graph& g, int v) {
  check_vertex(g, v);
  std::vector<VertexSet> layers;
  VertexSet seen;
  VertexSet frontier;
  frontier.insert(v);
  while (!frontier.empty()) {
    layers.push_back(frontier);
    seen |= frontier;
    VertexSet next;
    for (int u : frontier) next |= g.row(u);
    frontier = next - seen;
  }
  if (seen.size() != g.vertex_count())
    throw PreconditionError("bfs_layers requires a connected graph", (g.vertices() - seen).to_vector());
  return layers;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.vertex_count());
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.row(u).contains(v)) b.add_edge(u, v);
  return b.build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int off = g1.vertex_count();
  GraphBuilder b(off + g2.vertex_count());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(u + off, v + off);
  return b.build();
}

Graph permute(const Graph& g, const std::vector<int>& new_index) {
  if (static_cast<int>(new_index.size()) != g.vertex_count())
    throw InvalidArgument("permutation size does not match vertex count");
  GraphBuilder b(g.vertex_count());
  for (auto [u, v] : g.edges())
    b.add_edge(new_index[static_cast<std::size_t>(u)], new_index[static_cast<std::size_t>(v)]);
  return b.build();
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph star_graph(int leaves) {
  GraphBuilder b(leaves + 1);
  for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph bull_graph() {
  GraphBuilder b(5);
  b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 3).add_edge(4, 1).add_edge(4, 2);
  return b.build();
}

}  // namespace bullchrome
