#pragma once

#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// How a kernelization call ended.
//  unchanged  — input already within the size budget; kernel == input graph
//  reduced    — vertices were deleted; kernel is an induced subgraph
//  trivial_no — a reduction rule proved the budget k cannot suffice;
//               kernel is a fixed constant-size no-instance
//  infeasible — no edge set at all can reach the target class
enum class KernelKind { unchanged, reduced, trivial_no, infeasible };

struct KernelResult {
  KernelKind kind;
  Graph graph;
  int k_out = 0;
  // kernel vertex id -> original vertex id, ascending. Empty for
  // trivial_no / infeasible.
  std::vector<int> kept;
  // The deletion set X the marking scheme worked against (original ids).
  // Empty for trivial results and for inputs small enough to skip it.
  std::vector<int> partition_x;
};

struct CliqueKernelConfig {
  double epsilon = 1.0;
  int k = 0;
  int d = 1;  // ceil(1/epsilon)

  // Validates epsilon > 0 and k >= 0.
  static CliqueKernelConfig make(double epsilon, int k);
};

// min(|f|, k+1) when contracting f makes g complete, kInf otherwise.
// Throws NonEdgeInF if f contains a non-edge.
int objective_clc(const Graph& g, int k, const EdgeSet& f);

// Marking scheme over Y = V(g) - x, for every subset A of x with |A| <= d
// (the empty set included):
//   mark_m1 marks the minimum-id vertex of {y in Y : A subseteq N(y)};
//   mark_m2 marks the min(2k+1, ...) minimum-id vertices of
//           {y in Y : N(y) cap A is empty}.
// Conventions: a condition quantified over the empty A holds vacuously, so
// M1(empty) = Y and M2(empty) = Y. Both return sorted marked sets.
std::vector<int> mark_m1(const Graph& g, const std::vector<int>& x, int d);
std::vector<int> mark_m2(const Graph& g, const std::vector<int>& x, int d, int k);

// Worst-case kernel size 4k + (2k+2) * sum_{i=0..d} C(4k, i), saturating.
long long clique_kernel_size_bound(int k, int d);

// Kernelization pipeline:
//   (a) disconnected input        -> infeasible (no contraction set connects it)
//   (b) |V| <= k+3                -> unchanged
//   (c) 2-approx deletion set X with |X| > 4k -> trivial_no (P4 with budget 1)
//   (d) |V| <= clique_kernel_size_bound(k, d) -> unchanged
//   (e) otherwise keep X plus the vertices marked by mark_m1/mark_m2 and
//       return the induced subgraph as the kernel.
KernelResult reduce_clique(const Graph& g, const CliqueKernelConfig& cfg);

// Turns a solution attempt f_prime on the kernel (kernel vertex ids) into a
// solution on g. Trivial kinds and worthless attempts (kernel objective
// >= k+1) fall back to a spanning tree (spanning forest when g is
// disconnected); otherwise deleted-vertex witness sets are repaired by
// merging each offender into a fixed anchor with one crossing edge, keeping
// |F| <= (1 + 1/d) * |f_prime|. Throws InvalidKernelSolution if f_prime
// uses non-edges of the kernel graph.
EdgeSet lift_clique(const Graph& g, const CliqueKernelConfig& cfg, const KernelResult& kr,
                    const EdgeSet& f_prime);

}  // namespace contraction
