#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bullchrome/account.hpp"
#include "bullchrome/graph.hpp"
#include "bullchrome/modular.hpp"

namespace bullchrome {

/// Vertex coloring with colors 0..count()-1, every one of them used.
/// Construction relabels colors in order of first appearance.
class Coloring {
 public:
  Coloring() = default;
  /// Throws InvalidArgument on negative colors.
  explicit Coloring(const std::vector<int>& colors);

  int color(int v) const { return colors_.at(static_cast<std::size_t>(v)); }
  int count() const { return count_; }
  int vertex_count() const { return static_cast<int>(colors_.size()); }
  const std::vector<int>& colors() const { return colors_; }
  std::vector<VertexSet> classes() const;

  /// Same vertex count and no monochromatic edge.
  bool is_proper_for(const Graph& g) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int count_ = 0;
};

inline constexpr int kDefaultExactChromaticCap = 20;

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

/// Exact chromatic number: clique lower bound, DSATUR upper bound, then
/// DSATUR backtracking on k = upper - 1, upper - 2, ... Throws CapExceeded
/// above `cap` vertices.
ChromaticResult chromatic_number(const Graph& g, int cap = kDefaultExactChromaticCap);

/// A proper coloring with at most k colors, or nullopt if none exists.
std::optional<Coloring> find_k_coloring(const Graph& g, int k);

/// Optimal coloring of a perfect graph (exactly omega colors). Throws
/// CertificationError carrying the odd hole or antihole when g is imperfect.
Coloring color_perfect(const Graph& g);

/// Coloring of a triangle-free graph with at most t colors; exact chi when g
/// has at most `cap` vertices. Throws PreconditionError with a triangle and
/// ClassMembershipError when chi(g) > t.
Coloring color_triangle_free(const Graph& g, int t, int cap = kDefaultExactChromaticCap);

/// A coloring with the account of how it was produced.
struct StagedColoring {
  Coloring coloring;
  ColorAccount account;
};

/// Colors the quotient of a prime node. The node's representatives() induce
/// a copy of node.quotient in the decomposed graph.
using PrimeColorer = std::function<StagedColoring(const ModularTree& node)>;

/// Lifts colorings along a modular decomposition. Parallel children share a
/// palette, series children get disjoint palettes, and at a prime node each
/// quotient color class gets a palette as wide as its widest child. The count
/// is therefore at most the product of per-node counts along the worst
/// root-to-leaf path. Throws CertificationError if the prime colorer returns
/// an improper coloring or the lifted coloring fails to re-validate.
StagedColoring compose_coloring(const ModularTree& tree, const PrimeColorer& prime_colorer);

struct BoundReport {
  int chi = 0;
  int omega = 0;
  int t = 0;
  bool t_exact = false;  // t computed by t_parameter rather than supplied
  Budget bound;          // omega^(4 log t + 13)
  bool pass = false;
};

/// Checks chi <= omega^(4 log t + 13) with exact chi, omega and t. When t is
/// supplied and the graph is small enough it is cross-checked against
/// t_parameter (ClassMembershipError if too small). Requires a bull-free
/// graph (PreconditionError otherwise).
BoundReport verify_bound(const Graph& g, std::optional<int> t = std::nullopt,
                         int chromatic_cap = kDefaultExactChromaticCap, int t_cap = 14);

}  // namespace bullchrome
