#include <doctest.h>

#include "contraction/errors.hpp"
#include "contraction/graph.hpp"
#include "contraction/oracles.hpp"
#include "support/instances.hpp"

using namespace contraction;
using testinst::complete_graph;
using testinst::cycle_graph;
using testinst::path_graph;
using testinst::two_k2;

TEST_CASE("anchor optima for the two base problems") {
  const auto clique = brute_force_contraction(path_graph(4), 3, TargetClass::complete);
  REQUIRE(clique.has_value());
  CHECK(clique->second == 2);
  CHECK(clique->first == EdgeSet{{0, 1}, {1, 2}});  // first feasible in order

  const auto split = brute_force_contraction(cycle_graph(5), 3, TargetClass::split);
  REQUIRE(split.has_value());
  CHECK(split->second == 2);
}

TEST_CASE("brute force misses only when nothing fits the budget") {
  CHECK_FALSE(brute_force_contraction(path_graph(4), 1, TargetClass::complete).has_value());
  const auto one = brute_force_contraction(two_k2(), 1, TargetClass::split);
  REQUIRE(one.has_value());
  CHECK(one->first == EdgeSet{{0, 1}});
  // Disconnected graphs never reach a complete quotient.
  CHECK_FALSE(brute_force_contraction(two_k2(), 4, TargetClass::complete).has_value());
}

TEST_CASE("brute force guard rejects huge searches") {
  CHECK_THROWS_AS(brute_force_contraction(complete_graph(40), 4, TargetClass::split), TooLarge);
}

TEST_CASE("density is an exact reduced fraction") {
  const Graph k3 = complete_graph(3);
  CHECK(density(k3, {0, 1, 2}) == Rational{1, 1});
  CHECK(density(path_graph(3), {0, 1, 2}) == Rational{2, 3});
  CHECK(density(path_graph(3), {0}) == Rational{0, 1});
  CHECK(density(path_graph(4), {0, 1, 2, 3}) == Rational{1, 2});
}

TEST_CASE("densest subgraph search breaks ties to the least set") {
  const auto [set, edges] = densest_k_subgraph_brute(path_graph(4), 2);
  CHECK(set == std::vector<int>{0, 1});
  CHECK(edges == 1);
  CHECK_THROWS_AS(densest_k_subgraph_brute(path_graph(3), 5), TooSmall);
}

TEST_CASE("solution verification reports each layer") {
  const Graph p4 = path_graph(4);
  const EdgeSet tree = spanning_forest_edges(p4);
  const auto good = verify_solution(p4, 1, tree, TargetClass::complete);
  CHECK(good.edges_valid);
  CHECK(good.quotient_in_class);
  CHECK(good.value == 2);  // min(3 edges, k+1)

  const auto bad_edges = verify_solution(p4, 1, {{0, 2}}, TargetClass::complete);
  CHECK_FALSE(bad_edges.edges_valid);
  CHECK(bad_edges.value == kInf);

  const auto wrong_class = verify_solution(p4, 3, {{0, 1}}, TargetClass::complete);
  CHECK(wrong_class.edges_valid);
  CHECK_FALSE(wrong_class.quotient_in_class);
  CHECK(wrong_class.value == kInf);
}

TEST_CASE("target class dispatch") {
  CHECK(in_target_class(complete_graph(3), TargetClass::complete));
  CHECK(in_target_class(path_graph(4), TargetClass::split));
  CHECK(in_target_class(path_graph(4), TargetClass::chordal));
  CHECK_FALSE(in_target_class(cycle_graph(5), TargetClass::split));
  CHECK_FALSE(in_target_class(cycle_graph(4), TargetClass::chordal));
}
