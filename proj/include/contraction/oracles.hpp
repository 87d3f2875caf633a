#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

enum class TargetClass { complete, split, chordal };

bool in_target_class(const Graph& g, TargetClass cls);

// Smallest edge set whose contraction lands in cls, found by exhaustive
// search in (size, lexicographic-over-sorted-edge-list) order; the returned
// set is the first feasible one, so ties break lexicographically. Returns
// nullopt if no set of at most k edges works. Throws TooLarge when
// C(|E|, k) exceeds the guard.
std::optional<std::pair<EdgeSet, int>> brute_force_contraction(
    const Graph& g, int k, TargetClass cls, long long guard = 100000000LL);

// Exact edge density |E(g[s])| / C(|s|, 2) as a reduced fraction.
// den is 1 when |s| < 2 (density of a trivial set counts as 0/1).
struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};

Rational density(const Graph& g, const std::vector<int>& s);

// Exhaustive densest-k-subgraph: returns the lexicographically least k-set
// attaining the maximum induced edge count, plus that count. Throws TooSmall
// if k > |V|, TooLarge when C(|V|, k) exceeds the guard.
std::pair<std::vector<int>, int> densest_k_subgraph_brute(const Graph& g, int k,
                                                          long long guard = 100000000LL);

// Report for a claimed solution: are all pairs edges of g, does the
// quotient land in cls, and the objective value min(|f|, k+1) with kInf
// when the quotient misses the class or f is not even an edge set.
struct SolutionReport {
  bool edges_valid = false;
  bool quotient_in_class = false;
  int value = kInf;
};

SolutionReport verify_solution(const Graph& g, int k, const EdgeSet& f, TargetClass cls);

}  // namespace contraction
