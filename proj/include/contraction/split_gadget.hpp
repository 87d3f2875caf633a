#pragma once

#include <utility>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

// Host graph whose edges carry colors 0..t-1, aligned with graph.edges().
struct ColoredGraph {
  Graph graph;
  int t = 0;
  std::vector<int> color;
};

struct GadgetParams {
  int k = 0;        // target clique size in the host
  int t = 0;        // number of edge colors, k*(k-1)/2
  int rho = 0;      // copies of each host vertex, ceil(delta*t/k)
  int k_round = 0;  // pendant guards per owner, ceil(5*k_prime/2)+2
  double delta = 0.0;
};

enum class GadgetRole { z_copy, z_extra, edge_selector, cap, special, guard };

// Split-contraction instance built from an edge-colored host graph.
// Fixed vertex layout:
//   copies        [0, rho*host_n)             copy j of host u = u*rho + j
//   Z extras      [rho*host_n, z_total)       z_total = rho*host_n + k_round + 2
//   edge selectors[z_total, +m)               one per host edge, grouped by
//                                             color, lexicographic inside
//   caps          [cap_begin, +t)             one per color
//   specials      [sv_begin, +t)              one per color, forming a clique
//   guards        [guard_begin, ...)          k_round pendants per owner,
//                                             owners in id order: all of Z,
//                                             then caps, then specials
// Z (copies + extras) is a clique. Selector w_e for host edge e = (u,v) is
// adjacent to every Z vertex except the copies of u and v, plus the cap and
// the special of e's color.
struct GadgetInstance {
  Graph graph;
  int k_prime = 0;  // contraction budget, 2t + rho*k
  GadgetParams params;
  int host_n = 0;
  EdgeSet host_edges;          // selector order: grouped by color, lex inside
  std::vector<int> es_colors;  // color of each selector, aligned with host_edges

  int z_copies() const { return params.rho * host_n; }
  int z_total() const { return z_copies() + params.k_round + 2; }
  int es_begin() const { return z_total(); }
  int es_count() const { return static_cast<int>(host_edges.size()); }
  int cap_begin() const { return es_begin() + es_count(); }
  int sv_begin() const { return cap_begin() + params.t; }
  int guard_begin() const { return sv_begin() + params.t; }
  int x_copy(int u, int j) const { return u * params.rho + j; }
  int cap_vertex(int c) const { return cap_begin() + c; }
  int special_vertex(int c) const { return sv_begin() + c; }
  // (role, index): host vertex for copies, selector index for selectors,
  // color for caps/specials, owner vertex id for guards, 0 for extras.
  std::pair<GadgetRole, int> role_of(int v) const;
};

// Builds the gadget for finding a clique of size k whose edges use every
// color exactly once. Throws BadColorCount if cg.t != k*(k-1)/2,
// EmptyColorClass if some color is unused, TooSmall if the host has fewer
// than k+1 vertices, std::invalid_argument on malformed parameters.
GadgetInstance build_split_gadget(const ColoredGraph& cg, int k, double delta);

// Forward map: a colorful k-clique of the host becomes an edge set of size
// exactly k_prime whose contraction makes the gadget split. Throws
// NotAColorfulClique if the vertices are not a k-clique with pairwise
// distinct edge colors.
EdgeSet clique_to_split_solution(const GadgetInstance& gi, const std::vector<int>& clique);

// Reverse map: from any solution of size at most (5/4 - delta)*k_prime,
// recovers host vertices S with |S| <= k/delta and colorful host edges Y
// inside S with |Y| >= (3*delta/2)*t. Throws BudgetExceeded when f is
// larger than that threshold (checked first), NotASolution when the
// quotient is not split, AssertionViolation if a structural invariant of
// the recovery fails.
std::pair<std::vector<int>, EdgeSet> extract_dense_subgraph(const GadgetInstance& gi,
                                                            const EdgeSet& f);

}  // namespace contraction
