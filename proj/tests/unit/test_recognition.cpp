#include <doctest.h>

#include "bullchrome/enumerate.hpp"
#include "bullchrome/errors.hpp"
#include "bullchrome/extremal.hpp"
#include "bullchrome/modular.hpp"
#include "bullchrome/recognition.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

using namespace bullchrome;

namespace {

// Two disjoint C_5's (0..4, 5..9) and vertex 10 adjacent to the first.
Graph two_pentagons_and_apex() {
  GraphBuilder b(11);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 1) % 5);
    b.add_edge(10, i);
  }
  return b.build();
}

}  // namespace

TEST_CASE("bull detection") {
  const auto w = find_bull(bull_graph());
  REQUIRE(w);
  CHECK(VertexSet::from(*w) == VertexSet::range(5));
  CHECK(is_bull(bull_graph(), *w));
  CHECK(is_bull_free(cycle_graph(5)).holds);
  CHECK(is_bull_free(complete_graph(6)).holds);
  CHECK_FALSE(is_bull_free(bull_graph()).holds);
  CHECK(is_bull_free(bull_graph()).witness_kind == "bull");

  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const auto found = find_bull(g);
      CHECK(found.has_value() == oracle::has_bull(oracle::from(g)));
      if (found) CHECK(is_bull(g, *found));
    }
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = random_graph(7 + trial % 3, 0.5, rng);
    CHECK(find_bull(g).has_value() == oracle::has_bull(oracle::from(g)));
  }
}

TEST_CASE("triangle detection") {
  CHECK(find_triangle(complete_graph(3)).has_value());
  CHECK(is_triangle_free(petersen_graph()).holds);
  CHECK(is_triangle_free(mycielski_graph(3)).holds);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(4 + trial % 8, 0.25, rng);
    const auto t = find_triangle(g);
    CHECK(t.has_value() == oracle::has_triangle(oracle::from(g)));
    if (t) CHECK(is_clique(g, VertexSet::from(*t)));
  }
}

TEST_CASE("clique number") {
  CHECK(clique_number(complete_graph(7)).size == 7);
  for (int n = 1; n <= 3; ++n) CHECK(clique_number(mycielski_graph(n)).size == 2);
  const Graph c5k2 = substitute(cycle_graph(5), 0, complete_graph(2));
  CHECK(clique_number(c5k2).size == 3);
  CHECK(oracle::omega_all(oracle::from(c5k2)).back() == 3);
  CHECK(clique_number(empty_graph(0)).size == 0);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(3 + trial % 14, 0.55, rng);
    const CliqueResult r = clique_number(g);
    CHECK(r.size == oracle::omega_all(oracle::from(g)).back());
    CHECK(r.clique.size() == r.size);
    CHECK(is_clique(g, r.clique));
  }
  const Graph big = random_graph(60, 0.5, rng);
  const CliqueResult r = clique_number(big);
  CHECK(is_clique(big, r.clique));
  VertexSet within = big.vertices() - r.clique;
  CHECK(clique_number(big, within).size <= r.size);
}

TEST_CASE("stable sets") {
  CHECK(is_stable(cycle_graph(5), VertexSet{0, 2}));
  CHECK_FALSE(is_stable(complete_graph(2), VertexSet{0, 1}));
  CHECK(is_stable(petersen_graph(), VertexSet{}));
  CHECK_THROWS_AS(is_stable(cycle_graph(5), VertexSet{7}), InvalidArgument);
}

TEST_CASE("perfection through odd holes and antiholes") {
  const PropertyReport c5 = is_perfect(cycle_graph(5));
  CHECK_FALSE(c5.holds);
  CHECK(c5.witness_kind == "odd-hole");
  CHECK(is_odd_hole(cycle_graph(5), c5.witness));
  const PropertyReport anti = is_perfect(complement(cycle_graph(7)));
  CHECK_FALSE(anti.holds);
  CHECK(anti.witness_kind == "odd-antihole");
  CHECK(anti.witness.size() == 7);
  CHECK(is_perfect(complete_graph(6)).holds);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    // random bipartite graph on at most 9 vertices
    const int n = 2 + trial % 8;
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((u % 2) != (v % 2) && (rng() & 1U)) b.add_edge(u, v);
    const Graph g = b.build();
    CHECK(oracle::perfect_by_definition(oracle::from(g)));
    CHECK(is_perfect(g).holds);
  }
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) CHECK(is_perfect(g).holds == oracle::perfect_by_definition(oracle::from(g)));
}

TEST_CASE("N-perfection") {
  CHECK(is_n_perfect(cycle_graph(5)).holds);
  CHECK(is_n_perfect(complete_graph(1)).holds);
  const PropertyReport bad = is_n_perfect(two_pentagons_and_apex());
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness == std::vector<int>{10});
  REQUIRE(bad.causes.size() == 2);
  CHECK_FALSE(bad.causes[0].holds);
  CHECK_FALSE(bad.causes[1].holds);

  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      bool expected = true;
      for (int v = 0; v < n; ++v) {
        const VertexSet nv = g.neighbors(v);
        const bool in = oracle::perfect_by_definition(oracle::from(induced_subgraph(g, nv).graph));
        const bool out = oracle::perfect_by_definition(oracle::from(induced_subgraph(g, g.vertices() - nv).graph));
        if (!in && !out) expected = false;
      }
      CHECK(is_n_perfect(g).holds == expected);
    }
}

TEST_CASE("t parameter") {
  CHECK(t_parameter(empty_graph(0)) == 1);
  CHECK(t_parameter(complete_graph(5)) == 2);
  CHECK(t_parameter(cycle_graph(5)) == 3);
  CHECK(t_parameter(mycielski_graph(3)) == 4);
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) CHECK(t_parameter(g) == oracle::t_by_definition(oracle::from(g)));
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(9 + trial % 3, 0.35, rng);
    CHECK(t_parameter(g) == oracle::t_by_definition(oracle::from(g)));
  }
  CHECK_THROWS_AS(t_parameter(empty_graph(15)), CapExceeded);
}
