#include "bullchrome/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "bullchrome/errors.hpp"
#include "bullchrome/graph_io.hpp"

namespace bullchrome {

namespace {

using Mask = std::uint64_t;

bool singleton(Mask m) { return (m & (m - 1)) == 0; }

class Labeler {
 public:
  explicit Labeler(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_)) {
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.row(v).word(0);
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    std::vector<Mask> cells;
    cells.push_back(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1);
    search(std::move(cells), 0);
    std::vector<int> new_index(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) new_index[static_cast<std::size_t>(best_lab_[static_cast<std::size_t>(i)])] = i;
    return new_index;
  }

 private:
  // Splits cells by neighbor counts into other cells until equitable. Pieces
  // replace their parent in place, ordered by count, so the result depends
  // only on the graph structure and the incoming ordered partition.
  void refine(std::vector<Mask>& cells) const {
    int verts[64];
    int counts[64];
    int order[64];
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t wi = 0; wi < cells.size() && !changed; ++wi) {
        const Mask w = cells[wi];
        for (std::size_t xi = 0; xi < cells.size(); ++xi) {
          const Mask x = cells[xi];
          if (singleton(x)) continue;
          int k = 0;
          bool differ = false;
          for (Mask bits = x; bits; bits &= bits - 1) {
            const int v = std::countr_zero(bits);
            verts[k] = v;
            counts[k] = std::popcount(adj_[static_cast<std::size_t>(v)] & w);
            if (counts[k] != counts[0]) differ = true;
            ++k;
          }
          if (!differ) continue;
          std::iota(order, order + k, 0);
          std::stable_sort(order, order + k, [&](int a, int b) { return counts[a] < counts[b]; });
          std::vector<Mask> pieces;
          int current = -1;
          for (int i = 0; i < k; ++i) {
            const int idx = order[i];
            if (counts[idx] != current) {
              pieces.push_back(0);
              current = counts[idx];
            }
            pieces.back() |= Mask{1} << verts[idx];
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(xi));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(xi), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<Mask> certificate(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    std::vector<Mask> cert(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
      for (Mask bits = adj_[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])]; bits; bits &= bits - 1)
        cert[static_cast<std::size_t>(i)] |= Mask{1} << pos[static_cast<std::size_t>(std::countr_zero(bits))];
    return cert;
  }

  int find(std::vector<int>& parent, int v) const {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // current path pointwise.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int p : path_)
        if (gamma[static_cast<std::size_t>(p)] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(parent, v);
    return parent;
  }

  // Returns the tree level to resume at, or -1 to continue normally.
  int search(std::vector<Mask> cells, int level) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (!singleton(cells[i]) &&
          (target == cells.size() || std::popcount(cells[i]) < std::popcount(cells[target])))
        target = i;

    std::vector<int> explored;
    for (Mask bits = cells[target]; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const std::vector<int> orbit = stabilizer_orbits();
      const int rep = orbit[static_cast<std::size_t>(v)];
      if (std::find(explored.begin(), explored.end(), rep) != explored.end()) continue;
      explored.push_back(rep);

      std::vector<Mask> child = cells;
      child[target] &= ~(Mask{1} << v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), Mask{1} << v);
      path_.push_back(v);
      const int resume = search(std::move(child), level + 1);
      path_.pop_back();
      if (resume >= 0 && resume < level) return resume;
    }
    return -1;
  }

  int leaf(const std::vector<Mask>& cells) {
    std::vector<int> lab(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) lab[static_cast<std::size_t>(i)] = std::countr_zero(cells[static_cast<std::size_t>(i)]);
    std::vector<Mask> cert = certificate(lab);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_path_ = path_;
      first_cert_ = cert;
      best_lab_ = lab;
      best_cert_ = std::move(cert);
      return -1;
    }
    if (cert == first_cert_) {
      generators_.push_back(automorphism(first_lab_, lab));
      // The subtree hanging off the divergence point is an image of the
      // already-explored first subtree: back up to the divergence level.
      std::size_t common = 0;
      while (common < path_.size() && common < first_path_.size() && path_[common] == first_path_[common])
        ++common;
      return static_cast<int>(common);
    }
    if (cert == best_cert_) {
      generators_.push_back(automorphism(best_lab_, lab));
      return -1;
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
    return -1;
  }

  std::vector<int> automorphism(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    return gamma;
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> path_;
  std::vector<int> first_lab_, first_path_, best_lab_;
  std::vector<Mask> first_cert_, best_cert_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.vertex_count() > kCanonicalMaxVertices)
    throw CapExceeded("canonical labeling supports at most " + std::to_string(kCanonicalMaxVertices) +
                      " vertices, got " + std::to_string(g.vertex_count()));
  return Labeler(g).run();
}

Graph canonical_form(const Graph& g) { return permute(g, canonical_labeling(g)); }

std::string canonical_key(const Graph& g) { return emit_graph6(canonical_form(g)); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace bullchrome
