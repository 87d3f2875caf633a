#pragma once

#include <utility>
#include <vector>

#include "contraction/graph.hpp"

namespace contraction {

struct SetCoverInstance {
  int n_elements = 0;
  std::vector<std::vector<int>> sets;
  int k = 0;
};

enum class ChordalRole { set_vertex, elem_a, elem_b, elem_c, apex };

// Chordal-contraction instance produced from a set-cover instance.
// Fixed vertex layout over m = |sets|, n = n_elements:
//   set vertex s_j = j                     (0 <= j < m)
//   a_i = m + 3i, c_i = m + 3i + 1, b_i = m + 3i + 2
//   apex = m + 3n
// Edges: the set vertices form a clique; the apex is adjacent to every s_j,
// a_i and b_i; paths a_i - c_i - b_i; c_i - s_j iff element i is in set j.
struct ChordalInstance {
  Graph graph;
  int k = 0;
  SetCoverInstance source;

  int set_vertex(int j) const { return j; }
  int a_vertex(int i) const { return static_cast<int>(source.sets.size()) + 3 * i; }
  int c_vertex(int i) const { return a_vertex(i) + 1; }
  int b_vertex(int i) const { return a_vertex(i) + 2; }
  int apex() const { return static_cast<int>(source.sets.size()) + 3 * source.n_elements; }
  // (role, index); the index is j for set vertices, i for element gadget
  // vertices, and 0 for the apex.
  std::pair<ChordalRole, int> role_of(int v) const;
};

// min(|f|, k+1) when contracting f makes g chordal, kInf otherwise.
// Throws NonEdgeInF if f contains a non-edge.
int objective_chc(const Graph& g, int k, const EdgeSet& f);

// Builds the chordal-contraction instance for sc with the layout above,
// carrying sc.k over unchanged. Throws UncoveredElement if some universe
// element lies in no set, std::invalid_argument on malformed input.
ChordalInstance set_cover_to_chordal(const SetCoverInstance& sc);

// Maps a contraction solution back to set indices. If f0 is invalid (uses
// non-edges) or has k+1 or more distinct edges, returns every set index.
// Otherwise rewrites f0 edge by edge in ascending order -- apex-a_i,
// apex-b_i, a_i-c_i, b_i-c_i become apex-s_j for the minimum-index set j
// containing element i, and s_j-c_i becomes apex-s_j -- then returns the
// sorted indices of the sets whose vertices share the apex's witness set.
// When the quotient by f0 is chordal with at most k edges, the result
// covers the universe and has size at most |f0|.
std::vector<int> chordal_solution_to_set_cover(const ChordalInstance& ci, const EdgeSet& f0);

}  // namespace contraction
