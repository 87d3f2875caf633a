#include <doctest.h>

#include "contraction/clique_kernel.hpp"
#include "contraction/errors.hpp"
#include "contraction/graph.hpp"
#include "contraction/oracles.hpp"
#include "support/instances.hpp"

using namespace contraction;
using testinst::complete_graph;
using testinst::path_graph;
using testinst::star_graph;
using testinst::two_k2;

namespace {

Graph complete_plus_pendant(int clique_n) {
  EdgeSet edges;
  for (int u = 0; u < clique_n; ++u) {
    for (int v = u + 1; v < clique_n; ++v) edges.push_back({u, v});
  }
  edges.push_back({0, clique_n});
  return Graph(clique_n + 1, std::move(edges));
}

}  // namespace

TEST_CASE("configuration derives the subset depth from epsilon") {
  CHECK(CliqueKernelConfig::make(1.0, 2).d == 1);
  CHECK(CliqueKernelConfig::make(0.5, 2).d == 2);
  CHECK(CliqueKernelConfig::make(0.3, 2).d == 4);
  CHECK(CliqueKernelConfig::make(2.0, 2).d == 1);
  CHECK_THROWS_AS(CliqueKernelConfig::make(0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(CliqueKernelConfig::make(1.0, -1), std::invalid_argument);
}

TEST_CASE("kernel size bounds") {
  CHECK(clique_kernel_size_bound(0, 1) == 2);
  CHECK(clique_kernel_size_bound(0, 5) == 2);
  CHECK(clique_kernel_size_bound(1, 1) == 24);
  CHECK(clique_kernel_size_bound(3, 2) == 644);
  CHECK(clique_kernel_size_bound(1000, 50) > 1000000000LL);  // saturates, no overflow
}

TEST_CASE("objective counts edges only when the quotient is complete") {
  const Graph p4 = path_graph(4);
  CHECK(objective_clc(p4, 1, {{0, 1}}) == kInf);
  CHECK(objective_clc(p4, 3, {{0, 1}, {1, 2}, {2, 3}}) == 3);
  CHECK(objective_clc(p4, 1, {{0, 1}, {1, 2}, {2, 3}}) == 2);  // capped at k+1
  CHECK_THROWS_AS(objective_clc(p4, 1, {{0, 2}}), NonEdgeInF);
}

TEST_CASE("marking on the star keeps the least dominated leaf") {
  const Graph star = star_graph(4);
  CHECK(mark_m1(star, {0}, 1) == std::vector<int>{1});
  CHECK(mark_m2(star, {0}, 1, 0) == std::vector<int>{1});
  CHECK(mark_m2(star, {0}, 1, 1) == std::vector<int>{1, 2, 3});
}

TEST_CASE("a large complete graph shrinks to a triangle") {
  const auto cfg = CliqueKernelConfig::make(1.0, 1);
  const auto kr = reduce_clique(complete_graph(30), cfg);
  CHECK(kr.kind == KernelKind::reduced);
  CHECK(kr.graph == complete_graph(3));
  CHECK(kr.kept == std::vector<int>{0, 1, 2});
  CHECK(kr.partition_x.empty());
  CHECK(kr.k_out == 1);
}

TEST_CASE("pendant on a large clique survives kernelization and lifting") {
  const Graph g = complete_plus_pendant(29);
  const auto cfg = CliqueKernelConfig::make(1.0, 1);
  const auto kr = reduce_clique(g, cfg);
  REQUIRE(kr.kind == KernelKind::reduced);
  CHECK(kr.kept == std::vector<int>{0, 1, 2, 3, 4, 29});
  CHECK(kr.partition_x == std::vector<int>{1, 29});
  CHECK(kr.graph == complete_plus_pendant(5));

  const auto best = brute_force_contraction(kr.graph, kr.k_out, TargetClass::complete);
  REQUIRE(best.has_value());
  CHECK(best->first == EdgeSet{{0, 5}});
  const EdgeSet lifted = lift_clique(g, cfg, kr, best->first);
  CHECK(lifted == EdgeSet{{0, 29}});
  CHECK(objective_clc(g, 1, lifted) == 1);
}

TEST_CASE("spread-out graphs are rejected as trivial no-instances") {
  const auto cfg = CliqueKernelConfig::make(1.0, 1);
  const auto kr = reduce_clique(path_graph(12), cfg);
  CHECK(kr.kind == KernelKind::trivial_no);
  CHECK(kr.graph == path_graph(4));
  CHECK(kr.k_out == 1);
  CHECK(kr.kept.empty());
  // Any kernel answer lifts to the trivial spanning tree.
  const EdgeSet lifted = lift_clique(path_graph(12), cfg, kr, {});
  CHECK(lifted == path_graph(12).edges());
  CHECK(objective_clc(path_graph(12), 1, lifted) == 2);
}

TEST_CASE("disconnected inputs are infeasible") {
  const auto cfg = CliqueKernelConfig::make(1.0, 2);
  const auto kr = reduce_clique(two_k2(), cfg);
  CHECK(kr.kind == KernelKind::infeasible);
  const EdgeSet lifted = lift_clique(two_k2(), cfg, kr, {});
  CHECK(lifted == EdgeSet{{0, 1}, {2, 3}});
  CHECK(objective_clc(two_k2(), 2, lifted) == kInf);
}

TEST_CASE("small inputs pass through unchanged") {
  const auto cfg = CliqueKernelConfig::make(1.0, 2);
  const auto kr = reduce_clique(path_graph(4), cfg);
  CHECK(kr.kind == KernelKind::unchanged);
  CHECK(kr.graph == path_graph(4));
  // Two contractions beat the trivial value of k+1 = 3, so they translate.
  const EdgeSet lifted = lift_clique(path_graph(4), cfg, kr, {{0, 1}, {1, 2}});
  CHECK(lifted == EdgeSet{{0, 1}, {1, 2}});
}

TEST_CASE("kernel solutions must use kernel edges") {
  const Graph g = complete_plus_pendant(29);
  const auto cfg = CliqueKernelConfig::make(1.0, 1);
  const auto kr = reduce_clique(g, cfg);
  CHECK_THROWS_AS(lift_clique(g, cfg, kr, {{1, 5}}), InvalidKernelSolution);
  CHECK_THROWS_AS(lift_clique(g, cfg, kr, {{0, 40}}), InvalidKernelSolution);
}

TEST_CASE("worthless kernel solutions fall back to the spanning tree") {
  const Graph g = complete_plus_pendant(29);
  const auto cfg = CliqueKernelConfig::make(1.0, 1);
  const auto kr = reduce_clique(g, cfg);
  // Two kernel edges have value 2 = k+1 on the kernel: not worth translating.
  const EdgeSet lifted = lift_clique(g, cfg, kr, {{0, 1}, {0, 2}});
  CHECK(lifted.size() == g.vertex_count() - 1);  // spanning tree
  CHECK(objective_clc(g, 1, lifted) == 2);
}
