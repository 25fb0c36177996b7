#include "bullchrome/recognition.hpp"

#include <algorithm>

#include "bullchrome/coloring.hpp"
#include "bullchrome/errors.hpp"

namespace bullchrome {

std::optional<std::array<int, 5>> find_bull(const Graph& g) {
  for (auto [b, c] : g.edges()) {
    const VertexSet common = g.row(b) & g.row(c);
    for (int e : common) {
      VertexSet ends_b = g.row(b) - g.row(c) - g.row(e);
      ends_b.erase(c);
      ends_b.erase(e);
      VertexSet ends_c = g.row(c) - g.row(b) - g.row(e);
      ends_c.erase(b);
      ends_c.erase(e);
      if (ends_b.empty() || ends_c.empty()) continue;
      for (int a : ends_b) {
        const VertexSet far = ends_c - g.row(a);
        if (!far.empty()) return std::array<int, 5>{a, b, c, far.first(), e};
      }
    }
  }
  return std::nullopt;
}

bool is_bull(const Graph& g, const std::array<int, 5>& v) {
  const auto [a, b, c, d, e] = v;
  VertexSet all{a, b, c, d, e};
  if (all.size() != 5) return false;
  const std::array<std::pair<int, int>, 5> edges{{{a, b}, {b, c}, {c, d}, {e, b}, {e, c}}};
  int count = 0;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y)
      if (g.adjacent(v[static_cast<std::size_t>(x)], v[static_cast<std::size_t>(y)])) ++count;
  if (count != 5) return false;
  return std::all_of(edges.begin(), edges.end(), [&](auto uv) { return g.adjacent(uv.first, uv.second); });
}

PropertyReport is_bull_free(const Graph& g) {
  PropertyReport r{"bull-free", true, "bull", {}, {}};
  if (auto w = find_bull(g)) {
    r.holds = false;
    r.witness.assign(w->begin(), w->end());
  }
  return r;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const VertexSet common = g.row(u) & g.row(v);
    const int w = common.next(v);
    if (w >= 0) return std::array<int, 3>{u, v, w};
  }
  return std::nullopt;
}

PropertyReport is_triangle_free(const Graph& g) {
  PropertyReport r{"triangle-free", true, "triangle", {}, {}};
  if (auto w = find_triangle(g)) {
    r.holds = false;
    r.witness.assign(w->begin(), w->end());
  }
  return r;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  if (!s.is_subset_of(g.vertices())) throw InvalidArgument("vertex set not contained in graph");
  for (int v : s)
    if (g.row(v).intersects(s)) return false;
  return true;
}

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  CliqueResult run(const VertexSet& within) {
    VertexSet current;
    expand(within, current, 0);
    return {best_size_, best_};
  }

 private:
  // Greedy sequential coloring of `cands`: vertices listed by class, with
  // bound[i] = class index + 1 of order[i].
  void color_sort(const VertexSet& cands, std::vector<int>& order, std::vector<int>& bound) const {
    VertexSet uncolored = cands;
    int k = 0;
    while (!uncolored.empty()) {
      ++k;
      VertexSet available = uncolored;
      while (!available.empty()) {
        const int v = available.first();
        available -= g_.row(v);
        available.erase(v);
        uncolored.erase(v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  void expand(VertexSet cands, VertexSet& current, int size) {
    std::vector<int> order;
    std::vector<int> bound;
    color_sort(cands, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best_size_) return;
      const int v = order[i];
      current.insert(v);
      const VertexSet next = cands & g_.row(v);
      if (next.empty()) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current;
        }
      } else {
        expand(next, current, size + 1);
      }
      current.erase(v);
      cands.erase(v);
    }
  }

  const Graph& g_;
  int best_size_ = 0;
  VertexSet best_;
};

class HoleSearch {
 public:
  HoleSearch(const Graph& g, const VertexSet& within) : g_(g), within_(within) {}

  std::optional<std::vector<int>> run() {
    for (int s : within_) {
      start_ = s;
      allowed_ = within_;
      for (int v = 0; v <= s; ++v) allowed_.erase(v);
      path_ = {s};
      for (int p1 : g_.row(s) & allowed_) {
        path_.push_back(p1);
        VertexSet blocked;
        blocked.insert(s);
        if (extend(blocked)) return path_;
        path_.pop_back();
      }
    }
    return std::nullopt;
  }

 private:
  // path_ = p0..pk is an induced path whose interior avoids N(p0) beyond p1.
  // `blocked` = {p0} plus the closed neighborhoods of p1..p(k-1).
  bool extend(const VertexSet& blocked) {
    const int tail = path_.back();
    const int k = static_cast<int>(path_.size()) - 1;
    const VertexSet cands = (g_.row(tail) & allowed_) - blocked;
    for (int w : cands) {
      if (g_.row(start_).contains(w)) {
        // w closes a cycle of length k + 2
        const int len = k + 2;
        if (len >= 5 && len % 2 == 1) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      VertexSet next_blocked = blocked;
      next_blocked |= g_.row(tail);
      next_blocked.insert(tail);
      path_.push_back(w);
      if (extend(next_blocked)) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  VertexSet within_;
  VertexSet allowed_;
  int start_ = 0;
  std::vector<int> path_;
};

}  // namespace

CliqueResult clique_number(const Graph& g, const VertexSet& within) {
  return CliqueSearch(g).run(within & g.vertices());
}

CliqueResult clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

std::optional<std::vector<int>> find_odd_hole(const Graph& g, const VertexSet& within) {
  return HoleSearch(g, within & g.vertices()).run();
}

std::optional<std::vector<int>> find_odd_hole(const Graph& g) { return find_odd_hole(g, g.vertices()); }

bool is_odd_hole(const Graph& g, const std::vector<int>& cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 5 || len % 2 == 0) return false;
  if (VertexSet::from(cycle).size() != len) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
      if (g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]) != consecutive)
        return false;
    }
  return true;
}

PropertyReport is_perfect(const Graph& g, const VertexSet& within) {
  PropertyReport r{"perfect", true, "", {}, {}};
  if (auto hole = find_odd_hole(g, within)) {
    r.holds = false;
    r.witness_kind = "odd-hole";
    r.witness = *hole;
    return r;
  }
  if (auto antihole = find_odd_hole(complement(g), within)) {
    r.holds = false;
    r.witness_kind = "odd-antihole";
    r.witness = *antihole;
  }
  return r;
}

PropertyReport is_perfect(const Graph& g) { return is_perfect(g, g.vertices()); }

PropertyReport is_n_perfect(const Graph& g) {
  PropertyReport r{"N-perfect", true, "vertex", {}, {}};
  for (int v = 0; v < g.vertex_count(); ++v) {
    PropertyReport inside = is_perfect(g, g.row(v));
    if (inside.holds) continue;
    PropertyReport outside = is_perfect(g, g.vertices() - g.row(v));
    if (outside.holds) continue;
    inside.property = "perfect(N(v))";
    outside.property = "perfect(V-N(v))";
    r.holds = false;
    r.witness = {v};
    r.causes = {std::move(inside), std::move(outside)};
    return r;
  }
  return r;
}

int t_parameter(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw CapExceeded("t_parameter on " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  int best = 1;
  VertexSet chosen;
  // Branch over vertices in index order; a vertex may join when its
  // neighbors among the chosen ones are pairwise non-adjacent.
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (int w = 0; w < n; ++w)
        if (!chosen.contains(w) && is_stable(g, g.row(w) & chosen)) return;  // not maximal
      if (chosen.size() <= best) return;
      const InducedSubgraph h = induced_subgraph(g, chosen);
      best = std::max(best, chromatic_number(h.graph, n).chi);
      return;
    }
    if (is_stable(g, g.row(v) & chosen)) {
      chosen.insert(v);
      self(self, v + 1);
      chosen.erase(v);
    }
    self(self, v + 1);
  };
  if (n > 0) recurse(recurse, 0);
  return best;
}

}  // namespace bullchrome
