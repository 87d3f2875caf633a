#include <doctest.h>

#include <algorithm>

#include "contraction/errors.hpp"
#include "contraction/graph.hpp"
#include "contraction/oracles.hpp"
#include "contraction/split_gadget.hpp"
#include "contraction/split_kernel.hpp"
#include "support/instances.hpp"

using namespace contraction;

namespace {

GadgetInstance planted_gadget(double delta) {
  return build_split_gadget(testinst::planted_k3_host(5), 3, delta);
}

}  // namespace

TEST_CASE("gadget layout for the planted triangle host") {
  const auto gi = planted_gadget(0.5);

  CHECK(gi.params.k == 3);
  CHECK(gi.params.t == 3);
  CHECK(gi.params.rho == 1);
  CHECK(gi.k_prime == 9);
  CHECK(gi.params.k_round == 25);
  CHECK(gi.host_n == 5);

  CHECK(gi.z_copies() == 5);
  CHECK(gi.z_total() == 32);
  CHECK(gi.es_begin() == 32);
  CHECK(gi.es_count() == 7);
  CHECK(gi.cap_begin() == 39);
  CHECK(gi.sv_begin() == 42);
  CHECK(gi.guard_begin() == 45);
  // 38 owners (Z, caps, specials) x 25 pendant guards each.
  CHECK(gi.graph.vertex_count() == 45 + 25 * 38);

  // Selectors are grouped by color, lexicographic within a color.
  const EdgeSet want_edges = {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {3, 4}, {0, 4}, {1, 2}};
  const std::vector<int> want_colors = {0, 0, 1, 1, 1, 2, 2};
  CHECK(gi.host_edges == want_edges);
  CHECK(gi.es_colors == want_colors);

  CHECK(gi.role_of(0) == std::make_pair(GadgetRole::z_copy, 0));
  CHECK(gi.role_of(4) == std::make_pair(GadgetRole::z_copy, 4));
  CHECK(gi.role_of(5).first == GadgetRole::z_extra);
  CHECK(gi.role_of(31).first == GadgetRole::z_extra);
  CHECK(gi.role_of(33) == std::make_pair(GadgetRole::edge_selector, 1));
  CHECK(gi.role_of(39) == std::make_pair(GadgetRole::cap, 0));
  CHECK(gi.role_of(44) == std::make_pair(GadgetRole::special, 2));
  CHECK(gi.role_of(45) == std::make_pair(GadgetRole::guard, 0));
  CHECK(gi.role_of(45 + 25 * 38 - 1) == std::make_pair(GadgetRole::guard, 44));
}

TEST_CASE("gadget adjacency invariants") {
  const auto gi = planted_gadget(0.5);
  const Graph& g = gi.graph;

  // Z is a clique (copies of different host vertices included).
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(0, 31));
  CHECK(g.has_edge(4, 5));

  // Selector 32 hosts edge (0,1): misses exactly the copies of 0 and 1.
  CHECK_FALSE(g.has_edge(0, 32));
  CHECK_FALSE(g.has_edge(1, 32));
  CHECK(g.has_edge(2, 32));
  CHECK(g.has_edge(31, 32));
  // Selectors are pairwise non-adjacent and see only their color's cap/special.
  CHECK_FALSE(g.has_edge(32, 33));
  CHECK(g.has_edge(32, 39));
  CHECK(g.has_edge(32, 42));
  CHECK_FALSE(g.has_edge(32, 40));
  CHECK_FALSE(g.has_edge(32, 43));

  // Caps are independent; specials form a clique; the two never mix.
  CHECK_FALSE(g.has_edge(39, 40));
  CHECK(g.has_edge(42, 43));
  CHECK(g.has_edge(42, 44));
  CHECK_FALSE(g.has_edge(39, 42));
  CHECK_FALSE(g.has_edge(39, 0));

  // Guards are pendants on their owner.
  CHECK(g.neighbors(45).size() == 1);
  CHECK(g.neighbors(45)[0] == 0);
  const int last = 45 + 25 * 38 - 1;
  CHECK(g.neighbors(last).size() == 1);
  CHECK(g.neighbors(last)[0] == 44);
}

TEST_CASE("construction validates its inputs") {
  const auto host = testinst::planted_k3_host(5);
  CHECK_THROWS_AS(build_split_gadget(host, 2, 0.5), BadColorCount);
  CHECK_THROWS_AS(build_split_gadget(host, 3, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_split_gadget(host, 0, 0.5), std::invalid_argument);

  ColoredGraph gap{Graph(4, {{0, 1}, {1, 2}, {2, 3}}), 3, {0, 0, 1}};
  CHECK_THROWS_AS(build_split_gadget(gap, 3, 0.5), EmptyColorClass);

  ColoredGraph tight{Graph(3, {{0, 1}, {0, 2}, {1, 2}}), 3, {0, 1, 2}};
  CHECK_THROWS_AS(build_split_gadget(tight, 3, 0.5), TooSmall);

  ColoredGraph skewed{Graph(4, {{0, 1}, {0, 2}, {1, 2}}), 3, {0, 1}};
  CHECK_THROWS_AS(build_split_gadget(skewed, 3, 0.5), std::invalid_argument);
}

TEST_CASE("forward map turns the planted clique into a full solution") {
  const auto gi = planted_gadget(0.5);
  const EdgeSet f = clique_to_split_solution(gi, {0, 1, 2});
  CHECK(static_cast<int>(f.size()) == gi.k_prime);
  // Copies of the clique vertices fold into the first outside copy (host 3).
  const EdgeSet want = {{0, 3},   {1, 3},   {2, 3},   {32, 39}, {32, 42},
                        {34, 40}, {34, 43}, {38, 41}, {38, 44}};
  CHECK(f == want);
  CHECK(objective_spc(gi.graph, gi.k_prime, f) == gi.k_prime);
}

TEST_CASE("forward map rejects non-cliques and color clashes") {
  const auto gi = planted_gadget(0.5);
  CHECK_THROWS_AS(clique_to_split_solution(gi, {0, 1, 3}), NotAColorfulClique);  // (1,3) missing
  CHECK_THROWS_AS(clique_to_split_solution(gi, {0, 2, 3}), NotAColorfulClique);  // color repeat
  CHECK_THROWS_AS(clique_to_split_solution(gi, {0, 1}), NotAColorfulClique);
  CHECK_THROWS_AS(clique_to_split_solution(gi, {0, 1, 99}), NotAColorfulClique);
}

TEST_CASE("two-vertex clique in the degenerate single-color case") {
  ColoredGraph host{Graph(3, {{0, 1}, {1, 2}}), 1, {0, 0}};
  const auto gi = build_split_gadget(host, 2, 0.5);
  CHECK(gi.params.rho == 1);
  CHECK(gi.k_prime == 4);
  const EdgeSet f = clique_to_split_solution(gi, {1, 2});
  CHECK(f.size() == 4);
  CHECK(objective_spc(gi.graph, gi.k_prime, f) == 4);
}

TEST_CASE("reverse map recovers the planted triangle") {
  const auto gi = planted_gadget(0.25);
  const EdgeSet f = clique_to_split_solution(gi, {0, 1, 2});
  const auto [vertices, edges] = extract_dense_subgraph(gi, f);
  CHECK(vertices == std::vector<int>{0, 1, 2});
  CHECK(edges == EdgeSet{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("reverse map enforces its budget and solution checks") {
  const auto quarter = planted_gadget(0.25);
  const auto half = planted_gadget(0.5);
  // Same layout, different budget: (5/4 - delta) * k_prime.
  const EdgeSet f = clique_to_split_solution(half, {0, 1, 2});
  CHECK_THROWS_AS(extract_dense_subgraph(half, f), BudgetExceeded);
  CHECK_THROWS_AS(extract_dense_subgraph(quarter, {{0, 1}}), NotASolution);
}
