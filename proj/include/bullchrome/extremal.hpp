#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "bullchrome/graph.hpp"

namespace bullchrome {

/// Exact fraction in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Adds a shadow u_i for every vertex v_i (adjacent to N(v_i)) and an apex
/// adjacent to every shadow. Originals keep indices 0..k-1, shadows take
/// k..2k-1, the apex is 2k.
Graph mycielski_step(const Graph& g);
/// M_1 = K_2, M_{n+1} = mycielski_step(M_n). Throws InvalidArgument for n < 1.
Graph mycielski_graph(int n);

inline constexpr int kDefaultFractionalCap = 14;

struct FractionalResult {
  Rational value;
  /// Optimal fractional clique: vertex weights with every stable set summing
  /// to at most 1.
  std::vector<Rational> vertex_weights;
  /// Optimal fractional cover by maximal stable sets (zero weights omitted).
  std::vector<std::pair<VertexSet, Rational>> cover;
};

/// Fractional chromatic number as the optimum of the stable-set covering LP,
/// solved exactly by rational simplex with Bland's rule on the fractional
/// clique side. Both the clique weights and the cover are re-validated
/// before returning. Throws CapExceeded above `cap` vertices.
FractionalResult fractional_chromatic(const Graph& g, int cap = kDefaultFractionalCap);

/// Largest n for which phi_recursion computes the exact value; numerators
/// roughly double in length per step.
inline constexpr int kPhiExactCap = 16;

/// phi_1 = 2, phi_{n+1} = phi_n + 1/phi_n. Throws InvalidArgument for n < 1
/// and CapExceeded beyond kPhiExactCap.
Rational phi_recursion(int n);

/// Decides phi_n^2 >= 2(n+1) without rounding: exact rationals up to
/// kPhiExactCap, beyond that a rigorous lower bound for phi_n obtained by
/// iterating x -> x + 1/x (monotone for x >= 1) with every step rounded
/// down to a multiple of 2^-256.
bool phi_lower_bound_check(int n);

/// Runs phi_lower_bound_check for every n in 1..n_max with one pass of the
/// recursion; returns the least failing n, if any.
std::optional<int> phi_lower_bound_first_failure(int n_max);

/// True iff the fractional chromatic number of the triangle-free graph h
/// exceeds 2^d (exact comparison). Throws PreconditionError on a triangle.
bool fractional_exceeds_power_of_two(const Graph& h, int d, int cap = kDefaultFractionalCap);

enum class BaseKind { mycielski_induced, complete };

/// A graph of the base class: an induced subgraph of M_{t-1} or a complete
/// graph.
struct BaseGraphSpec {
  BaseKind kind = BaseKind::complete;
  int t = 0;                  // mycielski_induced: subgraph of M_{t-1}
  std::vector<int> vertices;  // mycielski_induced: kept vertices, ascending
  int size = 1;               // complete: K_size

  Graph build() const;
  friend bool operator==(const BaseGraphSpec&, const BaseGraphSpec&) = default;
};

/// Visits every base graph for t: all non-empty induced subgraphs of M_{t-1}
/// (by vertex subset) and K_1..K_complete_cap. For t = 1 only K_1. Throws
/// InvalidArgument for t < 1 and CapExceeded when M_{t-1} has more than 20
/// vertices.
void for_each_base_graph(int t, int complete_cap,
                         const std::function<void(const BaseGraphSpec&, const Graph&)>& visit);

/// Expression over base graphs with disjoint union and substitution.
struct CStarRecipe {
  enum class Op { base, disjoint_union, substitute };
  Op op = Op::base;
  BaseGraphSpec base;
  /// substitute: children[1] replaces vertex `position` of children[0].
  int position = 0;
  std::vector<CStarRecipe> children;

  friend bool operator==(const CStarRecipe&, const CStarRecipe&) = default;
};

Graph evaluate(const CStarRecipe& recipe);
nlohmann::json recipe_to_json(const CStarRecipe& recipe);
/// Throws InvalidArgument on malformed recipes.
CStarRecipe recipe_from_json(const nlohmann::json& j);

struct MembershipCertificate {
  bool bull_free = false;
  /// "exact" (t_parameter computed) or "recipe" (too large; membership follows
  /// from the triangle-free members being built from subgraphs of M_{t-1} by
  /// disjoint unions and stable-set substitutions).
  std::string method;
  int t_parameter = 0;  // exact method only
  bool in_class = false;
};

struct CStarSample {
  Graph graph;
  CStarRecipe recipe;
  MembershipCertificate membership;
};

struct CStarOptions {
  /// Mean number of composition steps is (1 - p) / p.
  double stop_probability = 0.15;
  int complete_cap = 5;
  /// Exact B_t membership check up to this many vertices.
  int exact_membership_cap = 14;
};

/// Seeded random member of the closure of the base class for t under disjoint
/// union and substitution, with at most `budget` vertices. The number of steps
/// is geometric; each step draws a fresh base graph and either takes a
/// disjoint union or substitutes (the current graph into a uniform vertex of
/// the new base, or the new base into a uniform vertex of the current graph).
/// The result is re-checked bull-free and, when small, against t_parameter
/// (CertificationError on failure). Throws CapExceeded for budget < 1.
CStarSample sample_cstar(int t, std::uint64_t seed, int budget, const CStarOptions& options = {});

}  // namespace bullchrome
