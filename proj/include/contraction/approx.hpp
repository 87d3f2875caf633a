#pragma once

#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// 2-approximation for the smallest vertex set X with g - X complete:
// both endpoints of a maximal matching of the complement graph, built
// greedily over the complement's edges in lexicographic order.
// Returns X sorted ascending.
std::vector<int> clique_deletion_2approx(const Graph& g);

// 5-approximation for the smallest vertex set S with g - S split: while a
// forbidden induced subgraph (C4, C5 or 2K2) exists, delete all of its
// vertices. Uses the lexicographically least forbidden subgraph each round,
// so the result is deterministic. Returns S sorted ascending.
std::vector<int> split_deletion_5approx(const Graph& g);

}  // namespace contraction
