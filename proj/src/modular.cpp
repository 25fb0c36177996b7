#include "bullchrome/modular.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "bullchrome/errors.hpp"
#include "bullchrome/recognition.hpp"

namespace bullchrome {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::parallel: return "parallel";
    case NodeKind::series: return "series";
    case NodeKind::prime: return "prime";
  }
  return "?";
}

VertexSet module_closure(const Graph& g, const VertexSet& within, const VertexSet& seed) {
  VertexSet x = seed;
  while (true) {
    VertexSet splitters;
    for (int w : within - x) {
      const VertexSet seen = g.row(w) & x;
      if (!seen.empty() && seen != x) splitters.insert(w);
    }
    if (splitters.empty()) return x;
    x |= splitters;
  }
}

bool is_homogeneous_set(const Graph& g, const VertexSet& x) {
  const int size = x.size();
  if (size <= 1 || size >= g.vertex_count() || !x.is_subset_of(g.vertices())) return false;
  for (int w : g.vertices() - x) {
    const VertexSet seen = g.row(w) & x;
    if (!seen.empty() && seen != x) return false;
  }
  return true;
}

namespace {

std::optional<VertexSet> least_homogeneous_within(const Graph& g, const VertexSet& within) {
  const int n = within.size();
  std::optional<VertexSet> best;
  for (int u : within)
    for (int v = within.next(u); v >= 0; v = within.next(v)) {
      const VertexSet m = module_closure(g, within, VertexSet{u, v});
      if (m.size() == n) continue;
      if (!best || m.size() < best->size() || (m.size() == best->size() && lex_less(m, *best))) best = m;
    }
  return best;
}

class Decomposer {
 public:
  explicit Decomposer(const Graph& g) : g_(g), co_(complement(g)) {}

  ModularTree decompose(const VertexSet& within) const {
    ModularTree node;
    node.vertices = within.to_vector();
    if (within.size() == 1) return node;

    std::vector<VertexSet> parts = components(g_, within);
    if (parts.size() > 1) {
      node.kind = NodeKind::parallel;
    } else if (parts = components(co_, within); parts.size() > 1) {
      node.kind = NodeKind::series;
    } else {
      node.kind = NodeKind::prime;
      parts = maximal_modules(within);
    }
    for (const VertexSet& p : parts) node.children.push_back(decompose(p));
    node.quotient = induced_subgraph(g_, node.representatives()).graph;
    return node;
  }

 private:
  // With g[within] and its complement both connected, the maximal proper
  // modules partition `within`; the one holding v is the union of all proper
  // modules generated by v and another vertex.
  std::vector<VertexSet> maximal_modules(const VertexSet& within) const {
    std::vector<VertexSet> parts;
    VertexSet assigned;
    for (int v : within) {
      if (assigned.contains(v)) continue;
      VertexSet part{v};
      for (int u : within) {
        if (u == v || part.contains(u)) continue;
        const VertexSet m = module_closure(g_, within, VertexSet{u, v});
        if (m != within) part |= m;
      }
      assigned |= part;
      parts.push_back(part);
    }
    return parts;
  }

  const Graph& g_;
  Graph co_;
};

std::pair<Graph, std::vector<int>> recompose_node(const ModularTree& node) {
  if (node.kind == NodeKind::leaf) return {empty_graph(1), node.vertices};
  Graph g = node.quotient;
  std::vector<int> labels(node.children.size(), -1);
  for (std::size_t i = node.children.size(); i-- > 0;) {
    auto [child, child_labels] = recompose_node(node.children[i]);
    g = substitute(g, static_cast<int>(i), child);
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(i));
    labels.insert(labels.begin() + static_cast<std::ptrdiff_t>(i), child_labels.begin(), child_labels.end());
  }
  return {g, labels};
}

}  // namespace

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
  return least_homogeneous_within(g, g.vertices());
}

bool is_prime(const Graph& g) { return !find_homogeneous_set(g).has_value(); }

std::vector<int> ModularTree::representatives() const {
  std::vector<int> reps;
  reps.reserve(children.size());
  for (const auto& c : children) reps.push_back(c.vertices.front());
  return reps;
}

int ModularTree::depth() const {
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return kind == NodeKind::leaf ? 0 : d + 1;
}

ModularTree modular_decomposition(const Graph& g) {
  if (g.vertex_count() == 0) return ModularTree{NodeKind::parallel, {}, {}, Graph{}};
  return Decomposer(g).decompose(g.vertices());
}

Graph recompose(const ModularTree& tree) {
  if (tree.vertices.empty()) return Graph{};
  auto [g, labels] = recompose_node(tree);
  return permute(g, labels);
}

Graph substitute(const Graph& g1, int x, const Graph& g2) {
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  if (x < 0 || x >= n1) throw InvalidArgument("substitution position " + std::to_string(x) + " out of range");
  if (n2 == 0) throw InvalidArgument("cannot substitute an empty graph");
  auto host = [&](int u) { return u < x ? u : u + n2 - 1; };
  GraphBuilder b(n1 - 1 + n2);
  for (auto [u, v] : g1.edges())
    if (u != x && v != x) b.add_edge(host(u), host(v));
  for (auto [u, v] : g2.edges()) b.add_edge(x + u, x + v);
  for (int u : g1.row(x))
    for (int w = 0; w < n2; ++w) b.add_edge(host(u), x + w);
  return b.build();
}

std::vector<LayerLemmaViolation> check_layer_lemma(const Graph& g, int v, int size_cap) {
  const std::vector<VertexSet> layers = bfs_layers(g, v);
  if (auto bull = find_bull(g))
    throw PreconditionError("layer lemma check requires a bull-free graph", {bull->begin(), bull->end()});

  std::vector<LayerLemmaViolation> violations;
  for (std::size_t r = 1; r < layers.size(); ++r) {
    const std::vector<int> layer = layers[r].to_vector();
    const int size = static_cast<int>(layer.size());
    if (size > 24) throw CapExceeded("layer of " + std::to_string(size) + " vertices is too large to enumerate");
    const VertexSet previous = layers[r - 1];
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size); ++mask) {
      const int count = std::popcount(mask);
      if (count > size_cap || count <= 2) continue;  // graphs on <= 2 vertices cannot violate
      VertexSet h;
      for (int i = 0; i < size; ++i)
        if ((mask >> i) & 1) h.insert(layer[static_cast<std::size_t>(i)]);
      if (least_homogeneous_within(g, h)) continue;
      for (int x : previous) {
        const VertexSet seen = g.row(x) & h;
        if (seen != h && !is_stable(g, seen)) violations.push_back({static_cast<int>(r), h.to_vector(), x});
      }
    }
  }
  return violations;
}

}  // namespace bullchrome
