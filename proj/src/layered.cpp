#include "bullchrome/layered.hpp"

#include <algorithm>
#include <string>

#include "bullchrome/errors.hpp"
#include "bullchrome/modular.hpp"
#include "bullchrome/recognition.hpp"

namespace bullchrome {

std::vector<VertexSet> LayerDecomposition::partition(int a) const {
  std::vector<VertexSet> out;
  VertexSet taken;
  for (const VertexSet& s : families.at(static_cast<std::size_t>(a))) {
    out.push_back(s - taken);
    taken |= s;
  }
  return out;
}

namespace {

LayerDecomposition layers_within(const Graph& g, const VertexSet& within, int v, int omega) {
  LayerDecomposition ld;
  ld.root = v;
  ld.omega = omega;
  VertexSet seen;
  VertexSet frontier{v};
  while (!frontier.empty()) {
    ld.layers.push_back(frontier);
    seen |= frontier;
    VertexSet next;
    for (int u : frontier) next |= g.row(u);
    frontier = (next & within) - seen;
  }
  if (seen != within) throw PreconditionError("layering requires a connected graph", (within - seen).to_vector());

  ld.families.assign(ld.layers.size(), {});
  if (ld.layers.size() < 2) return ld;
  const InducedSubgraph first = induced_subgraph(g, ld.layers[1]);
  const Coloring c = color_perfect(first.graph);
  auto& cover = ld.families[1];
  cover.assign(static_cast<std::size_t>(std::max(omega, c.count())), VertexSet{});
  for (int i = 0; i < first.graph.vertex_count(); ++i)
    cover[static_cast<std::size_t>(c.color(i))].insert(first.to_parent[static_cast<std::size_t>(i)]);
  for (std::size_t a = 2; a < ld.layers.size(); ++a) {
    auto& here = ld.families[a];
    for (const VertexSet& below : ld.families[a - 1]) {
      VertexSet s;
      for (int w : ld.layers[a])
        if (g.row(w).intersects(below)) s.insert(w);
      here.push_back(s);
    }
  }
  return ld;
}

struct Piece {
  std::vector<int> colors;  // full length, -1 outside the piece
  int count = 0;
  ColorAccount account;
};

class NPerfectColorer {
 public:
  NPerfectColorer(const Graph& g, int t, const NPerfectOptions& options) : g_(g), t_(t), options_(options) {}

  Piece color(const VertexSet& within) {
    Piece out = blank();
    if (within.empty()) {
      out.account = {"empty", 0, 0, std::nullopt, {}};
      return out;
    }
    const int omega = clique_number(g_, within).size;
    const std::vector<VertexSet> comps = components(g_, within);
    if (comps.size() == 1) return color_connected(within, omega);

    out.account = {"components", within.size(), 0, Budget::power(omega, t_, 2, 5), {}};
    for (const VertexSet& comp : comps) {
      Piece p = color(comp);
      for (int v : comp) out.colors[static_cast<std::size_t>(v)] = p.colors[static_cast<std::size_t>(v)];
      out.count = std::max(out.count, p.count);
      out.account.children.push_back(std::move(p.account));
    }
    out.account.colors_used = out.count;
    return out;
  }

 private:
  Piece blank() const {
    Piece p;
    p.colors.assign(static_cast<std::size_t>(g_.vertex_count()), -1);
    return p;
  }

  Piece color_connected(const VertexSet& within, int omega) {
    Piece out = blank();
    if (omega <= 1) {
      for (int v : within) out.colors[static_cast<std::size_t>(v)] = 0;
      out.count = 1;
      out.account = {"base", within.size(), 1, Budget::exactly(1, "1"), {}};
      return out;
    }
    for (int u : within) {
      const VertexSet rest = within - g_.row(u);
      if (!is_perfect(g_, rest).holds) continue;
      Piece inner = color(within & g_.row(u));
      const InducedSubgraph outer_graph = induced_subgraph(g_, rest);
      const Coloring outer = color_perfect(outer_graph.graph);
      for (int v : within & g_.row(u)) out.colors[static_cast<std::size_t>(v)] = inner.colors[static_cast<std::size_t>(v)];
      for (int i = 0; i < outer_graph.graph.vertex_count(); ++i)
        out.colors[static_cast<std::size_t>(outer_graph.to_parent[static_cast<std::size_t>(i)])] = inner.count + outer.color(i);
      out.count = inner.count + outer.count();
      out.account = {"neighborhood-recursion", within.size(), out.count, Budget::peeled(omega, t_, 2, 5), {}};
      out.account.children.push_back(std::move(inner.account));
      out.account.children.push_back(
          {"perfect-part", rest.size(), outer.count(), Budget::exactly(omega, "omega"), {}});
      return out;
    }
    return color_layered(within, omega);
  }

  Piece color_layered(const VertexSet& within, int omega) {
    const LayerDecomposition ld = layers_within(g_, within, within.first(), omega);
    std::vector<Piece> layers;
    for (std::size_t r = 0; r < ld.layers.size(); ++r) {
      Piece layer = blank();
      if (r == 0) {
        layer.colors[static_cast<std::size_t>(ld.root)] = 0;
        layer.count = 1;
      } else if (r == 1) {
        const auto& cover = ld.families[1];
        for (std::size_t b = 0; b < cover.size(); ++b)
          for (int v : cover[b]) {
            layer.colors[static_cast<std::size_t>(v)] = static_cast<int>(b);
            layer.count = std::max(layer.count, static_cast<int>(b) + 1);
          }
      } else {
        for (const VertexSet& family : ld.partition(static_cast<int>(r))) {
          if (family.empty()) continue;
          Piece f = color_family(family, ld.layers[r - 1], omega);
          for (int v : family) layer.colors[static_cast<std::size_t>(v)] = layer.count + f.colors[static_cast<std::size_t>(v)];
          layer.count += f.count;
          layer.account.children.push_back(std::move(f.account));
        }
      }
      layer.account.stage = "layer-" + std::to_string(r);
      layer.account.vertices = ld.layers[r].size();
      layer.account.colors_used = layer.count;
      layer.account.budget = Budget::power(omega, t_, 2, 4);
      layers.push_back(std::move(layer));
    }

    int width[2] = {0, 0};
    for (std::size_t r = 0; r < layers.size(); ++r) width[r % 2] = std::max(width[r % 2], layers[r].count);
    Piece out = blank();
    out.count = width[0] + width[1];
    out.account = {"layered", within.size(), out.count, Budget::power(omega, t_, 2, 5), {}};
    for (std::size_t r = 0; r < layers.size(); ++r) {
      const int offset = r % 2 == 0 ? 0 : width[0];
      for (int v : ld.layers[r]) out.colors[static_cast<std::size_t>(v)] = offset + layers[r].colors[static_cast<std::size_t>(v)];
      out.account.children.push_back(std::move(layers[r].account));
    }
    return out;
  }

  Piece color_family(const VertexSet& family, const VertexSet& previous, int omega) {
    const InducedSubgraph sub = induced_subgraph(g_, family);
    const ModularTree tree = modular_decomposition(sub.graph);
    StagedColoring staged = compose_coloring(tree, [&](const ModularTree& node) {
      std::vector<int> reps = node.representatives();
      for (int& r : reps) r = sub.to_parent[static_cast<std::size_t>(r)];
      return color_prime_piece(reps, previous);
    });
    Piece out = blank();
    for (int i = 0; i < sub.graph.vertex_count(); ++i)
      out.colors[static_cast<std::size_t>(sub.to_parent[static_cast<std::size_t>(i)])] = staged.coloring.color(i);
    out.count = staged.coloring.count();
    out.account = {"stable-family", family.size(), out.count, Budget::power(omega, t_, 2, 3), {}};
    out.account.children.push_back(std::move(staged.account));
    return out;
  }

  StagedColoring color_prime_piece(const std::vector<int>& reps, const VertexSet& previous) {
    const VertexSet piece = VertexSet::from(reps);
    const Graph h = induced_subgraph(g_, reps).graph;
    bool dominated = false;
    for (int x : previous) {
      const VertexSet seen = g_.row(x) & piece;
      if (seen == piece) dominated = true;
      else if (!is_stable(g_, seen))
        throw CertificationError("vertex " + std::to_string(x) + " sees a non-stable proper part of a prime piece",
                                 reps);
    }
    const int omega_h = clique_number(h).size;
    const int n = h.vertex_count();
    if (dominated) {
      Coloring c = color_perfect(h);
      const int used = c.count();
      return {std::move(c), {"prime-perfect", n, used, Budget::power(omega_h, t_, 1, 0), {}}};
    }
    if (omega_h >= 3)
      throw CertificationError("undominated prime piece has clique number " + std::to_string(omega_h), reps);
    if (omega_h <= 1)
      return {Coloring(std::vector<int>(static_cast<std::size_t>(n), 0)), {"prime-stable", n, 1, Budget::exactly(1, "1"), {}}};
    Coloring c = color_triangle_free(h, t_, options_.exact_cap);
    const int used = c.count();
    return {std::move(c), {"prime-triangle-free", n, used, Budget::power(omega_h, t_, 1, 0), {}}};
  }

  const Graph& g_;
  int t_;
  NPerfectOptions options_;
};

void check_class(const Graph& g, int t, const NPerfectOptions& options) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (!options.check_preconditions) return;
  if (auto bull = find_bull(g)) throw PreconditionError("input contains a bull", {bull->begin(), bull->end()});
  if (g.vertex_count() <= options.t_check_cap) {
    const int exact = t_parameter(g, options.t_check_cap);
    if (exact > t)
      throw ClassMembershipError("a triangle-free induced subgraph needs " + std::to_string(exact) +
                                 " colors, more than t = " + std::to_string(t));
  }
}

Coloring finish(const Graph& g, const std::vector<int>& colors, const char* what) {
  Coloring c(colors);
  if (!c.is_proper_for(g)) throw CertificationError(std::string(what) + " produced an improper coloring");
  return c;
}

}  // namespace

LayerDecomposition build_layer_decomposition(const Graph& g, int v) {
  bfs_layers(g, v);
  const PropertyReport n_perfect = is_perfect(g, g.neighbors(v));
  if (!n_perfect.holds) throw PreconditionError("N(v) is not perfect (" + n_perfect.witness_kind + ")", n_perfect.witness);
  return layers_within(g, g.vertices(), v, clique_number(g).size);
}

StagedColoring color_nperfect(const Graph& g, int t, const NPerfectOptions& options) {
  check_class(g, t, options);
  if (options.check_preconditions) {
    const PropertyReport np = is_n_perfect(g);
    if (!np.holds) throw PreconditionError("input is not N-perfect", np.witness);
  }
  Piece p = NPerfectColorer(g, t, options).color(g.vertices());
  return {finish(g, p.colors, "color_nperfect"), std::move(p.account)};
}

StagedColoring color_bull_free(const Graph& g, int t, const NPerfectOptions& options) {
  check_class(g, t, options);
  const ModularTree tree = modular_decomposition(g);
  StagedColoring staged = compose_coloring(tree, [&](const ModularTree& node) {
    const Graph& q = node.quotient;
    const PropertyReport np = is_n_perfect(q);
    if (!np.holds)
      throw CertificationError("prime bull-free quotient is not N-perfect", node.representatives());
    Piece p = NPerfectColorer(q, t, options).color(q.vertices());
    return StagedColoring{finish(q, p.colors, "color_nperfect"), std::move(p.account)};
  });
  const Coloring coloring = finish(g, staged.coloring.colors(), "color_bull_free");
  const int omega = clique_number(g).size;
  ColorAccount root{"bull-free-pipeline", g.vertex_count(), coloring.count(), Budget::power(omega, t, 4, 13), {}};
  root.children.push_back(std::move(staged.account));
  return {coloring, std::move(root)};
}

}  // namespace bullchrome
