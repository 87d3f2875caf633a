#pragma once

#include <vector>

#include "contraction/clique_kernel.hpp"  // KernelKind
#include "contraction/graph.hpp"

namespace contraction {

struct SplitKernelConfig {
  double epsilon = 1.0;
  int k = 0;
  double alpha_prime = 1.5;  // 1 + epsilon/2, the target lossiness
  double alpha = 1.25;       // working factor, 1 < alpha < alpha_prime
  int d = 4;                 // max(2, ceil(1/(alpha-1)))
  double c = 4.0;            // 1/(alpha_prime - alpha), exact-search threshold

  // Midpoint alpha = (1 + alpha_prime)/2. Validates epsilon > 0, k >= 0.
  static SplitKernelConfig make(double epsilon, int k);
  // Explicit alpha; must satisfy 1 < alpha < 1 + epsilon/2.
  static SplitKernelConfig make_with_alpha(double epsilon, int k, double alpha);
};

struct SplitKernelResult {
  KernelKind kind;
  Graph graph;
  int k_out = 0;
  // kernel vertex id -> original vertex id, ascending. Empty for trivial_no.
  std::vector<int> kept;
  // Split-structure bookkeeping in original ids: the deletion set S, and the
  // marked clique-side / independent-side vertices the kernel retains.
  // Empty when the pipeline exited before computing them.
  std::vector<int> part_s;
  std::vector<int> part_x;
  std::vector<int> part_y;
  // Contractions forced by components other than the retained one
  // (sum of |C|-1 over them); 0 for connected inputs.
  int mandatory_cost = 0;
};

// min(|f|, k+1) when contracting f makes g a split graph, kInf otherwise.
// Throws NonEdgeInF if f contains a non-edge.
int objective_spc(const Graph& g, int k, const EdgeSet& f);

// Rewrites a solution f (quotient of (g, f) must be split, else
// NotASolution; g must be connected) into one of at most the same size
// whose quotient has a split partition with every non-trivial witness set
// on the clique side. Works by repeatedly shifting an independent-side
// non-trivial witness set into an adjacent clique-side one: respan the set
// from the crossing edge's endpoint, cut one leaf off, reconnect across.
EdgeSet normalize_split_solution(const Graph& g, const EdgeSet& f);

// Marking over the independent side y, for every subset A of s with
// |A| <= d (empty set included):
//   - min(k+2, ...) minimum-id members of N(A) cap y, and
//   - the highest-degree member (ties by min id) of {v in y : A subseteq N(v)}.
// Conventions: N(empty) is empty; "A subseteq N(v)" holds vacuously for
// empty A. Returns the sorted marked set.
std::vector<int> mark_y(const Graph& g, const std::vector<int>& s, const std::vector<int>& y,
                        int d, int k);

// Marking over the clique side x, for every subset A of s cup y_marked with
// |A| <= d: min(2, ...) minimum-id members of {v in x : A subseteq N(v)} and
// min(2k+2, ...) minimum-id members of {v in x : N(v) cap A empty}; plus,
// afterwards, up to 2k+2 lowest-id not-yet-marked vertices of x. Sorted.
std::vector<int> mark_x(const Graph& g, const std::vector<int>& s, const std::vector<int>& x,
                        const std::vector<int>& y_marked, int d, int k);

// Worst-case kernel size 10k + Ymax + Xmax with
//   Ymax = (k+3) * sum_{i<=d} C(10k, i)
//   Xmax = (2k+4) * sum_{i<=d} C(10k + Ymax, i) + (2k+2),
// saturating (the true values are astronomical for k >= 1).
long long split_kernel_size_bound(int k, int d);

// Kernelization pipeline. Disconnected inputs first: all components except
// the largest one (ties by minimum id) must collapse to single vertices, at
// mandatory cost sum(|C|-1); if two components have >= k+2 vertices or that
// cost exceeds k the instance is a trivial no (C5 with budget 1). Otherwise
// the retained component is kernelized with budget k:
//   (b) |V| <= k+3                      -> unchanged
//   (c) 5-approx deletion set S, |S| > 10k -> trivial_no
//   (d) |V| <= split_kernel_size_bound  -> unchanged
//   (e) keep S plus the mark_y / mark_x marks, induced subgraph as kernel.
SplitKernelResult reduce_split(const Graph& g, const SplitKernelConfig& cfg);

// Constructive lifting for kernel solutions with |f_prime| <= k whose
// quotient is split (throws InvalidKernelSolution otherwise, or when
// f_prime uses non-edges of the kernel). Normalizes f_prime, re-adds the
// deleted vertices as singletons, merges each clique-side witness set that
// misses a deleted clique-side vertex into a fixed marked-clique anchor
// (one crossing edge each), and repairs the at most one independent-side
// witness set adjacent to a deleted independent vertex with one extra edge:
// |F| <= alpha * |f_prime| + 1 + mandatory_cost, quotient split. Spanning
// trees of non-retained components are appended for disconnected inputs.
EdgeSet lift_split_construct(const Graph& g, const SplitKernelConfig& cfg,
                             const SplitKernelResult& kr, const EdgeSet& f_prime);

// Full solution lifting:
//   (1) trivial_no, or kernel objective >= k+1 (or invalid quotient):
//       spanning tree (forest) of g;
//   (2) c <= |f_prime| <= k: lift_split_construct;
//   (3) |f_prime| < c: exact search over edge sets of g of size up to
//       ceil(alpha*c) (values cap at k+1, so sizes beyond k are never
//       needed), returning the optimum.
EdgeSet lift_split(const Graph& g, const SplitKernelConfig& cfg, const SplitKernelResult& kr,
                   const EdgeSet& f_prime);

}  // namespace contraction
