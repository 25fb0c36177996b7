#include "bullchrome/coloring.hpp"

#include <algorithm>
#include <string>

#include "bullchrome/errors.hpp"
#include "bullchrome/recognition.hpp"

namespace bullchrome {

Coloring::Coloring(const std::vector<int>& colors) : colors_(colors.size()) {
  std::vector<int> relabel;
  for (std::size_t v = 0; v < colors.size(); ++v) {
    const int c = colors[v];
    if (c < 0) throw InvalidArgument("vertex " + std::to_string(v) + " has no color");
    if (static_cast<std::size_t>(c) >= relabel.size()) relabel.resize(static_cast<std::size_t>(c) + 1, -1);
    if (relabel[static_cast<std::size_t>(c)] < 0) relabel[static_cast<std::size_t>(c)] = count_++;
    colors_[v] = relabel[static_cast<std::size_t>(c)];
  }
}

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(static_cast<std::size_t>(count_));
  for (std::size_t v = 0; v < colors_.size(); ++v) out[static_cast<std::size_t>(colors_[v])].insert(static_cast<int>(v));
  return out;
}

bool Coloring::is_proper_for(const Graph& g) const {
  if (vertex_count() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (colors_[static_cast<std::size_t>(u)] == colors_[static_cast<std::size_t>(v)]) return false;
  return true;
}

namespace {

// DSATUR with backtracking over at most k colors. A new color is only ever
// opened as the next unused index, which removes palette symmetry.
class Dsatur {
 public:
  Dsatur(const Graph& g, int k)
      : g_(g),
        n_(g.vertex_count()),
        k_(k),
        color_(static_cast<std::size_t>(n_), -1),
        seen_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(std::max(k, 1)), 0),
        saturation_(static_cast<std::size_t>(n_), 0) {}

  std::optional<std::vector<int>> solve() {
    if (n_ == 0) return color_;
    if (k_ <= 0) return std::nullopt;
    if (search(n_, 0)) return color_;
    return std::nullopt;
  }

  /// Plain DSATUR: smallest feasible color, never backtracks.
  std::vector<int> greedy() {
    for (int left = n_; left > 0; --left) {
      const int v = pick();
      int c = 0;
      while (c < k_ && seen(v, c)) ++c;
      assign(v, c);
    }
    return color_;
  }

 private:
  int& seen(int v, int c) { return seen_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }

  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (color_[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = saturation_[static_cast<std::size_t>(v)];
      if (sat < best_sat) continue;
      int deg = 0;
      for (int u : g_.row(v))
        if (color_[static_cast<std::size_t>(u)] < 0) ++deg;
      if (sat > best_sat || deg > best_deg) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    for (int u : g_.row(v))
      if (seen(u, c)++ == 0) ++saturation_[static_cast<std::size_t>(u)];
  }

  void unassign(int v, int c) {
    color_[static_cast<std::size_t>(v)] = -1;
    for (int u : g_.row(v))
      if (--seen(u, c) == 0) --saturation_[static_cast<std::size_t>(u)];
  }

  bool search(int left, int used) {
    if (left == 0) return true;
    const int v = pick();
    if (saturation_[static_cast<std::size_t>(v)] >= k_) return false;
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      if (seen(v, c)) continue;
      assign(v, c);
      if (search(left - 1, std::max(used, c + 1))) return true;
      unassign(v, c);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
};

void certify(const Coloring& c, const Graph& g, const char* what) {
  if (!c.is_proper_for(g)) throw CertificationError(std::string(what) + " produced an improper coloring");
}

}  // namespace

std::optional<Coloring> find_k_coloring(const Graph& g, int k) {
  auto colors = Dsatur(g, k).solve();
  if (!colors) return std::nullopt;
  return Coloring(*colors);
}

ChromaticResult chromatic_number(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapExceeded("exact chromatic number on " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(cap));
  if (n == 0) return {0, Coloring{}};
  const int lower = clique_number(g).size;
  Coloring best(Dsatur(g, n).greedy());
  for (int k = best.count() - 1; k >= lower; --k) {
    auto c = find_k_coloring(g, k);
    if (!c) break;
    best = std::move(*c);
    k = best.count();
  }
  certify(best, g, "chromatic_number");
  return {best.count(), best};
}

Coloring color_perfect(const Graph& g) {
  const PropertyReport perfect = is_perfect(g);
  if (!perfect.holds)
    throw CertificationError("color_perfect on an imperfect graph (" + perfect.witness_kind + ")", perfect.witness);
  if (g.vertex_count() == 0) return Coloring{};
  const int omega = clique_number(g).size;
  auto c = find_k_coloring(g, omega);
  if (!c) throw CertificationError("perfect graph not colorable with omega colors");
  certify(*c, g, "color_perfect");
  return *c;
}

Coloring color_triangle_free(const Graph& g, int t, int cap) {
  if (auto tri = find_triangle(g))
    throw PreconditionError("color_triangle_free on a graph with a triangle", {tri->begin(), tri->end()});
  if (g.vertex_count() <= cap) {
    ChromaticResult r = chromatic_number(g, cap);
    if (r.chi > t)
      throw ClassMembershipError("triangle-free graph has chromatic number " + std::to_string(r.chi) + " > t = " +
                                 std::to_string(t));
    return r.coloring;
  }
  auto c = find_k_coloring(g, t);
  if (!c) throw ClassMembershipError("triangle-free graph is not " + std::to_string(t) + "-colorable");
  certify(*c, g, "color_triangle_free");
  return *c;
}

namespace {

struct Lifted {
  std::vector<int> colors;  // indexed like node.vertices
  int count = 0;
  ColorAccount account;
};

Lifted lift(const ModularTree& node, const PrimeColorer& prime_colorer) {
  Lifted out;
  if (node.kind == NodeKind::leaf) {
    out.colors = {0};
    out.count = 1;
    return out;
  }
  std::vector<Lifted> parts;
  parts.reserve(node.children.size());
  for (const auto& child : node.children) parts.push_back(lift(child, prime_colorer));

  const std::size_t k = parts.size();
  std::vector<int> offset(k, 0);
  out.account.stage = std::string("modular-") + to_string(node.kind);
  out.account.vertices = node.leaf_count();

  switch (node.kind) {
    case NodeKind::parallel:
      for (const auto& p : parts) out.count = std::max(out.count, p.count);
      break;
    case NodeKind::series:
      for (std::size_t i = 0; i < k; ++i) {
        offset[i] = out.count;
        out.count += parts[i].count;
      }
      break;
    case NodeKind::prime: {
      StagedColoring q = prime_colorer(node);
      if (!q.coloring.is_proper_for(node.quotient))
        throw CertificationError("prime colorer returned an improper quotient coloring", node.representatives());
      std::vector<int> width(static_cast<std::size_t>(q.coloring.count()), 0);
      for (std::size_t i = 0; i < k; ++i) {
        auto& w = width[static_cast<std::size_t>(q.coloring.color(static_cast<int>(i)))];
        w = std::max(w, parts[i].count);
      }
      std::vector<int> start(width.size(), 0);
      for (std::size_t c = 0; c < width.size(); ++c) {
        start[c] = out.count;
        out.count += width[c];
      }
      for (std::size_t i = 0; i < k; ++i)
        offset[i] = start[static_cast<std::size_t>(q.coloring.color(static_cast<int>(i)))];
      out.account.children.push_back(std::move(q.account));
      break;
    }
    case NodeKind::leaf: break;
  }

  // Children own disjoint ascending slices of node.vertices; merge by vertex.
  std::vector<std::pair<int, int>> by_vertex;
  by_vertex.reserve(node.vertices.size());
  for (std::size_t i = 0; i < k; ++i) {
    const auto& child = node.children[i];
    for (std::size_t j = 0; j < child.vertices.size(); ++j)
      by_vertex.emplace_back(child.vertices[j], parts[i].colors[j] + offset[i]);
    if (parts[i].account.vertices > 0) out.account.children.push_back(std::move(parts[i].account));
  }
  std::sort(by_vertex.begin(), by_vertex.end());
  out.colors.reserve(by_vertex.size());
  for (auto [v, c] : by_vertex) out.colors.push_back(c);
  out.account.colors_used = out.count;
  return out;
}

}  // namespace

StagedColoring compose_coloring(const ModularTree& tree, const PrimeColorer& prime_colorer) {
  if (tree.vertices.empty()) return {Coloring{}, ColorAccount{"modular-empty", 0, 0, std::nullopt, {}}};
  Lifted lifted = lift(tree, prime_colorer);
  std::vector<int> colors(tree.vertices.size());
  for (std::size_t i = 0; i < tree.vertices.size(); ++i)
    colors[static_cast<std::size_t>(tree.vertices[i])] = lifted.colors[i];
  Coloring coloring(colors);
  certify(coloring, recompose(tree), "compose_coloring");
  if (lifted.account.stage.empty()) lifted.account = {"modular-leaf", 1, 1, std::nullopt, {}};
  lifted.account.colors_used = coloring.count();
  return {coloring, std::move(lifted.account)};
}

BoundReport verify_bound(const Graph& g, std::optional<int> t, int chromatic_cap, int t_cap) {
  if (auto bull = find_bull(g)) throw PreconditionError("verify_bound requires a bull-free graph", {bull->begin(), bull->end()});
  BoundReport r;
  r.chi = chromatic_number(g, chromatic_cap).chi;
  r.omega = clique_number(g).size;
  if (t) {
    if (*t < 1) throw InvalidArgument("t must be at least 1");
    r.t = *t;
    if (g.vertex_count() <= t_cap) {
      const int exact = t_parameter(g, t_cap);
      if (exact > *t)
        throw ClassMembershipError("supplied t = " + std::to_string(*t) + " is below the exact value " +
                                   std::to_string(exact));
    }
  } else {
    r.t = t_parameter(g, t_cap);
    r.t_exact = true;
  }
  r.bound = Budget::power(r.omega, r.t, 4, 13);
  r.pass = r.bound.admits(r.chi);
  return r;
}

}  // namespace bullchrome
