#include <doctest.h>

#include <cmath>

#include "bullchrome/account.hpp"
#include "bullchrome/coloring.hpp"
#include "bullchrome/enumerate.hpp"
#include "bullchrome/errors.hpp"
#include "bullchrome/extremal.hpp"
#include "bullchrome/recognition.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace bullchrome;

namespace {

StagedColoring exact_prime(const ModularTree& node) {
  Coloring c = chromatic_number(node.quotient).coloring;
  const int used = c.count();
  return {std::move(c), {"exact", node.quotient.vertex_count(), used, std::nullopt, {}}};
}

// Largest product of per-node quotient color counts along a root-to-leaf path.
long path_product(const ModularTree& node) {
  if (node.kind == NodeKind::leaf) return 1;
  long worst = 0;
  for (const auto& c : node.children) worst = std::max(worst, path_product(c));
  long here = 1;
  if (node.kind == NodeKind::series) here = static_cast<long>(node.children.size());
  if (node.kind == NodeKind::prime) here = chromatic_number(node.quotient).chi;
  return here * worst;
}

}  // namespace

TEST_CASE("exact chromatic number") {
  for (int n = 1; n <= 8; ++n) CHECK(chromatic_number(complete_graph(n)).chi == n);
  CHECK(chromatic_number(mycielski_graph(3)).chi == 4);
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(Graph{}).chi == 0);
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const ChromaticResult r = chromatic_number(g);
      CHECK(r.chi == oracle::chi_backtracking(oracle::from(g)));
      CHECK(r.coloring.is_proper_for(g));
      CHECK(r.coloring.count() == r.chi);
    }
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(8 + trial % 7, 0.45, rng);
    const int chi = chromatic_number(g).chi;
    CHECK(chi == oracle::chi_all(oracle::from(g)).back());
    CHECK(find_k_coloring(g, chi).has_value());
    CHECK_FALSE(find_k_coloring(g, chi - 1).has_value());
    CHECK(clique_number(g).size <= chi);
  }
  CHECK_THROWS_AS(chromatic_number(empty_graph(21)), CapExceeded);
}

TEST_CASE("coloring normalization") {
  const Coloring c({5, 2, 5, 9});
  CHECK(c.colors() == std::vector<int>{0, 1, 0, 2});
  CHECK(c.count() == 3);
  CHECK(c.classes()[0] == VertexSet{0, 2});
  CHECK_THROWS_AS(Coloring({0, -1}), InvalidArgument);
  CHECK_FALSE(Coloring({0, 0}).is_proper_for(complete_graph(2)));
  CHECK_FALSE(Coloring({0, 1}).is_proper_for(complete_graph(3)));
}

TEST_CASE("perfect and triangle-free colorers") {
  CHECK(color_perfect(path_graph(6)).count() == 2);
  CHECK(color_perfect(complete_graph(5)).count() == 5);
  CHECK(color_perfect(path_graph(4)).count() == 2);
  try {
    color_perfect(cycle_graph(5));
    FAIL("C_5 is not perfect");
  } catch (const CertificationError& e) {
    CHECK(is_odd_hole(cycle_graph(5), e.witness()));
  }
  CHECK(color_triangle_free(cycle_graph(5), 3).count() == 3);
  CHECK(color_triangle_free(empty_graph(4), 1).count() == 1);
  CHECK_THROWS_AS(color_triangle_free(mycielski_graph(3), 3), ClassMembershipError);
  CHECK_THROWS_AS(color_triangle_free(complete_graph(3), 5), PreconditionError);
  // above the exact cap the t-coloring search takes over
  const Coloring big = color_triangle_free(mycielski_graph(4), 5, 10);
  CHECK(big.is_proper_for(mycielski_graph(4)));
  CHECK(big.count() <= 5);
}

TEST_CASE("composition over the modular decomposition") {
  const StagedColoring k5 = compose_coloring(modular_decomposition(complete_graph(5)), exact_prime);
  CHECK(k5.coloring.count() == 5);
  const StagedColoring e4 = compose_coloring(modular_decomposition(empty_graph(4)), exact_prime);
  CHECK(e4.coloring.count() == 1);
  const Graph c5k2 = substitute(cycle_graph(5), 0, complete_graph(2));
  const StagedColoring c = compose_coloring(modular_decomposition(c5k2), exact_prime);
  // the composer pays the full K_2 on top of the quotient's class: 2 + 1 + 1
  CHECK(c.coloring.count() == 4);
  CHECK(c.coloring.is_proper_for(c5k2));
  CHECK(oracle::chi_all(oracle::from(c5k2)).back() == 3);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 5), 0.5, rng);
    for (int step = 0; step < 3; ++step) {
      const Graph h = random_graph(1 + static_cast<int>(rng() % 4), 0.5, rng);
      g = rng() % 3 ? substitute(g, static_cast<int>(rng() % g.vertex_count()), h) : disjoint_union(g, h);
    }
    const ModularTree t = modular_decomposition(g);
    const StagedColoring s = compose_coloring(t, exact_prime);
    CHECK(s.coloring.is_proper_for(g));
    CHECK(s.coloring.count() <= path_product(t));
    if (g.vertex_count() <= 14) CHECK(s.coloring.count() >= chromatic_number(g).chi);
  }

  const PrimeColorer broken = [](const ModularTree& node) {
    return StagedColoring{Coloring(std::vector<int>(static_cast<std::size_t>(node.quotient.vertex_count()), 0)), {}};
  };
  CHECK_THROWS_AS(compose_coloring(modular_decomposition(cycle_graph(5)), broken), CertificationError);
}

TEST_CASE("substitution bound holds on small bull-free graphs") {
  // Smallest k with chi <= omega^k on every prime bull-free graph up to 7
  // vertices, then chi <= omega^(2k+3) on every bull-free graph.
  EnumerationOptions pruned;
  pruned.hereditary = true;
  std::vector<Graph> all;
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n, [](const Graph& x) { return !find_bull(x).has_value(); }, pruned))
      all.push_back(g);
  int k = 1;
  for (const Graph& g : all) {
    if (!is_prime(g)) continue;
    const int omega = clique_number(g).size;
    const int chi = chromatic_number(g).chi;
    if (omega < 2) continue;
    while (std::pow(omega, k) < chi) ++k;
  }
  CHECK(k == 2);
  for (const Graph& g : all) {
    const int omega = clique_number(g).size;
    CHECK(chromatic_number(g).chi <= std::pow(omega, 2 * k + 3));
  }
}

TEST_CASE("exact budgets") {
  // 2^(4 log 3 + 13) = 3^4 * 2^13
  CHECK(power_bound_floor(2, 3, 4, 13) == 663552);
  CHECK(power_bound_floor(3, 2, 2, 5) == 2187);
  CHECK(power_bound_floor(1, 7, 4, 13) == 1);
  CHECK(power_bound_floor(0, 3, 2, 5) == 0);
  CHECK(power_bound_floor(5, 1, 2, 5) == 3125);
  for (int base : {3, 5, 6})
    for (int t : {3, 5, 6, 7}) {
      const long double exact = std::pow(static_cast<long double>(base), 2 * std::log2(static_cast<long double>(t)) + 4);
      CHECK(power_bound_floor(base, t, 2, 4) == static_cast<long long>(std::floor(exact)));
    }
  const Budget b = Budget::peeled(3, 2, 2, 5);
  CHECK(b.limit == 2 * 2 * 2 * 2 * 2 * 2 * 2 + 3);
  CHECK(b.admits(131));
  CHECK_FALSE(b.admits(132));
}

TEST_CASE("main bound report") {
  const BoundReport c5 = verify_bound(cycle_graph(5));
  CHECK(c5.chi == 3);
  CHECK(c5.omega == 2);
  CHECK(c5.t == 3);
  CHECK(c5.bound.limit == 663552);
  CHECK(c5.pass);
  const BoundReport perfect = verify_bound(path_graph(5));
  CHECK(perfect.chi == perfect.omega);
  CHECK(perfect.pass);
  CHECK_THROWS_AS(verify_bound(bull_graph()), PreconditionError);
  CHECK_THROWS_AS(verify_bound(cycle_graph(5), 2), ClassMembershipError);
  CHECK(verify_bound(cycle_graph(5), 4).pass);
}
