#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

Small from(const bullchrome::Graph& g) {
  if (g.vertex_count() > 20) throw std::invalid_argument("oracle graphs are limited to 20 vertices");
  Small s;
  s.n = g.vertex_count();
  s.adj.assign(static_cast<std::size_t>(s.n), 0);
  for (int u = 0; u < s.n; ++u)
    for (int v = 0; v < s.n; ++v)
      if (u != v && g.adjacent(u, v)) s.adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
  return s;
}

Small from_edge_mask(int n, std::uint64_t mask) {
  Small s;
  s.n = n;
  s.adj.assign(static_cast<std::size_t>(n), 0);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) {
        s.adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
        s.adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
      }
  return s;
}

bullchrome::Graph to_graph(const Small& s) {
  bullchrome::GraphBuilder b(s.n);
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

bool is_clique(const Small& g, Mask s) {
  for (int v = 0; v < g.n; ++v)
    if ((s >> v) & 1U)
      if ((g.adj[static_cast<std::size_t>(v)] & s) != (s & ~(Mask{1} << v))) return false;
  return true;
}

bool is_stable(const Small& g, Mask s) {
  for (int v = 0; v < g.n; ++v)
    if (((s >> v) & 1U) && (g.adj[static_cast<std::size_t>(v)] & s)) return false;
  return true;
}

std::vector<int> omega_all(const Small& g) {
  std::vector<int> w(std::size_t{1} << g.n, 0);
  for (Mask s = 1; s < (Mask{1} << g.n); ++s) {
    const int v = std::countr_zero(s);
    const Mask rest = s & ~(Mask{1} << v);
    w[s] = std::max(w[rest], 1 + w[rest & g.adj[static_cast<std::size_t>(v)]]);
  }
  return w;
}

std::vector<int> chi_all(const Small& g) {
  const Mask full = (Mask{1} << g.n) - 1;
  std::vector<bool> stable(std::size_t{1} << g.n);
  for (Mask s = 0; s <= full; ++s) stable[s] = is_stable(g, s);
  std::vector<int> chi(std::size_t{1} << g.n, 0);
  for (Mask s = 1; s <= full; ++s) {
    const Mask low = s & (~s + 1);
    int best = g.n + 1;
    // every stable subset of s containing its lowest vertex
    const Mask others = s & ~low;
    for (Mask sub = others;; sub = (sub - 1) & others) {
      const Mask cls = sub | low;
      if (stable[cls]) best = std::min(best, 1 + chi[s & ~cls]);
      if (sub == 0) break;
    }
    chi[s] = best;
  }
  return chi;
}

namespace {

bool extend(const Small& g, int k, std::vector<int>& color, int v, int used) {
  if (v == g.n) return true;
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
    if (!ok) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (extend(g, k, color, v + 1, std::max(used, c + 1))) return true;
  }
  return false;
}

}  // namespace

bool k_colorable(const Small& g, int k) {
  std::vector<int> color(static_cast<std::size_t>(g.n), -1);
  return extend(g, k, color, 0, 0);
}

int chi_backtracking(const Small& g) {
  int k = 0;
  while (!k_colorable(g, k)) ++k;
  return k;
}

bool perfect_by_definition(const Small& g) {
  const auto w = omega_all(g);
  const auto c = chi_all(g);
  for (std::size_t s = 0; s < w.size(); ++s)
    if (w[s] != c[s]) return false;
  return true;
}

bool has_bull(const Small& g) {
  // bull: path a-b-c-d, e adjacent to exactly b and c
  const int n = g.n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e) {
            const int vs[5] = {a, b, c, d, e};
            bool distinct = true;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j)
                if (vs[i] == vs[j]) distinct = false;
            if (!distinct) continue;
            const bool pattern[5][5] = {{0, 1, 0, 0, 0}, {1, 0, 1, 0, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 0}, {0, 1, 1, 0, 0}};
            bool match = true;
            for (int i = 0; i < 5 && match; ++i)
              for (int j = 0; j < 5 && match; ++j)
                if (i != j && g.adjacent(vs[i], vs[j]) != pattern[i][j]) match = false;
            if (match) return true;
          }
  return false;
}

bool has_triangle(const Small& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
  return false;
}

bool is_module(const Small& g, Mask x) {
  for (int v = 0; v < g.n; ++v) {
    if ((x >> v) & 1U) continue;
    const Mask seen = g.adj[static_cast<std::size_t>(v)] & x;
    if (seen != 0 && seen != x) return false;
  }
  return true;
}

std::vector<Mask> homogeneous_sets(const Small& g) {
  std::vector<Mask> out;
  for (Mask x = 1; x < (Mask{1} << g.n); ++x) {
    const int size = std::popcount(x);
    if (size > 1 && size < g.n && is_module(g, x)) out.push_back(x);
  }
  return out;
}

bool prime_by_definition(const Small& g) { return homogeneous_sets(g).empty(); }

int t_by_definition(const Small& g) {
  const auto c = chi_all(g);
  int best = 1;
  for (Mask s = 0; s < (Mask{1} << g.n); ++s) {
    bool triangle = false;
    for (int a = 0; a < g.n && !triangle; ++a)
      if ((s >> a) & 1U) {
        const Mask na = g.adj[static_cast<std::size_t>(a)] & s;
        for (int b = 0; b < g.n && !triangle; ++b)
          if ((na >> b) & 1U)
            if (g.adj[static_cast<std::size_t>(b)] & na) triangle = true;
      }
    if (!triangle) best = std::max(best, c[s]);
  }
  return best;
}

std::vector<std::vector<int>> distances(const Small& g) {
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(g.n), std::vector<int>(static_cast<std::size_t>(g.n), inf));
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (u == v) d[u][v] = 0;
      else if (g.adjacent(u, v)) d[u][v] = 1;
  for (int k = 0; k < g.n; ++k)
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

namespace {

std::uint64_t relabeled_mask(const Small& g, const std::vector<int>& perm) {
  std::uint64_t mask = 0;
  int bit = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v, ++bit)
      if (g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) mask |= std::uint64_t{1} << bit;
  return mask;
}

}  // namespace

int isomorphism_class_count(int n, bool (*keep)(const Small&)) {
  if (n > 6) throw std::invalid_argument("brute-force class counting is limited to 6 vertices");
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> classes;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Small g = from_edge_mask(n, mask);
    if (keep && !keep(g)) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do best = std::min(best, relabeled_mask(g, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

bool isomorphic_brute(const Small& a, const Small& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> id = perm;
  const std::uint64_t target = relabeled_mask(b, id);
  do
    if (relabeled_mask(a, perm) == target) return true;
  while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
