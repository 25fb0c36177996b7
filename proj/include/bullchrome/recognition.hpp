#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bullchrome/graph.hpp"

namespace bullchrome {

/// Outcome of a property test. For "free"-type properties a failing report
/// carries the forbidden configuration; `causes` holds nested reports (used by
/// N-perfection to expose both imperfect sides).
struct PropertyReport {
  std::string property;
  bool holds = true;
  /// Kind of witness: "bull", "triangle", "odd-hole", "odd-antihole", "vertex".
  std::string witness_kind;
  std::vector<int> witness;
  std::vector<PropertyReport> causes;
};

/// Vertices (a, b, c, d, e) with a-b-c-d an induced path and e adjacent to
/// exactly b and c.
std::optional<std::array<int, 5>> find_bull(const Graph& g);
PropertyReport is_bull_free(const Graph& g);
/// True iff the five vertices, in (a, b, c, d, e) order, induce a bull.
bool is_bull(const Graph& g, const std::array<int, 5>& v);

std::optional<std::array<int, 3>> find_triangle(const Graph& g);
PropertyReport is_triangle_free(const Graph& g);

struct CliqueResult {
  int size = 0;
  VertexSet clique;
};

/// Exact maximum clique (branch and bound with greedy coloring bounds).
CliqueResult clique_number(const Graph& g);
CliqueResult clique_number(const Graph& g, const VertexSet& within);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);

/// An induced cycle of odd length >= 5, listed in cycle order, restricted to
/// `within`.
std::optional<std::vector<int>> find_odd_hole(const Graph& g, const VertexSet& within);
std::optional<std::vector<int>> find_odd_hole(const Graph& g);
/// True iff `cycle` is an induced cycle in g of odd length >= 5, in order.
bool is_odd_hole(const Graph& g, const std::vector<int>& cycle);

/// Perfection via absence of odd holes and odd antiholes in g[within].
PropertyReport is_perfect(const Graph& g, const VertexSet& within);
PropertyReport is_perfect(const Graph& g);

/// For every v, N(v) or V(g) \ N(v) (v retained, it is isolated there)
/// must be perfect. A failing report has witness {v} and two causes.
PropertyReport is_n_perfect(const Graph& g);

inline constexpr int kDefaultTParameterCap = 14;

/// Maximum chromatic number over triangle-free induced subgraphs; 1 for the
/// empty graph. Throws CapExceeded when g has more than `cap` vertices.
int t_parameter(const Graph& g, int cap = kDefaultTParameterCap);

}  // namespace bullchrome
