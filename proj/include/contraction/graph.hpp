#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace contraction {

// Objective values live in 0..k+1 with "no solution" mapped to kInf.
// kInf is only ever compared, never used in arithmetic.
inline constexpr int kInf = std::numeric_limits<int>::max();

// Unordered vertex pair, stored normalized as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Ordered list of distinct edges of some host graph.
using EdgeSet = std::vector<Edge>;

// Simple undirected graph: no self-loops, no parallel edges.
// Immutable after construction; all operations below are pure functions.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on out-of-range endpoints, self-loops
  // or duplicate edges.
  Graph(int n, EdgeSet edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  // Sorted lexicographically, each pair normalized (u < v).
  const EdgeSet& edges() const { return edges_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<std::vector<int>> adj_;
};

// Partition of the vertices of a host graph into the blocks that a set of
// contractions collapses. Blocks are sorted ascending and ordered by their
// minimum element; rep[v] is the minimum id of v's block and block_index[v]
// the position of that block (= the quotient vertex it becomes).
struct WitnessStructure {
  std::vector<std::vector<int>> blocks;
  std::vector<int> rep;
  std::vector<int> block_index;

  static WitnessStructure from_blocks(int n, std::vector<std::vector<int>> blocks);
  static WitnessStructure singletons(int n);
  int block_count() const { return static_cast<int>(blocks.size()); }
};

// Split partition: clique_side induces a clique, independent_side an
// independent set. Both sorted ascending.
struct SplitPartition {
  std::vector<int> clique_side;
  std::vector<int> independent_side;
};

// Contracts every edge in f. Returns the quotient graph together with the
// witness structure of the contraction: blocks are the components of (V, f),
// and quotient vertex i is the block with the i-th smallest minimum id.
// The result depends on f only as a set. Throws NonEdgeInF if f contains a
// pair that is not an edge of g.
std::pair<Graph, WitnessStructure> contract_edges(const Graph& g, const EdgeSet& f);

// Quotient of g by an explicit witness structure. Every block must induce a
// connected subgraph of g (throws DisconnectedBlock otherwise). Equals the
// graph produced by contracting a spanning tree of each block.
Graph quotient_by_witness(const Graph& g, const WitnessStructure& w);

// True iff g is connected and every pair of vertices is adjacent.
// The empty graph and a single vertex count as complete.
bool is_complete(const Graph& g);

// Canonical split recognizer. Vertices are sorted by non-increasing degree
// (ties by id) and placed with the classical degree-sequence threshold; the
// threshold index is maximal, so swing vertices land on the clique side.
// Returns the partition, or nullopt if g is not a split graph.
std::optional<SplitPartition> is_split(const Graph& g);

// If g is not split, returns the vertex set of a forbidden induced subgraph
// (C4, C5 or 2K2, at most 5 vertices): the lexicographically least
// qualifying tuple. Returns nullopt on split graphs.
std::optional<std::vector<int>> find_forbidden_split_subgraph(const Graph& g);

// Perfect-elimination-ordering test (maximum cardinality search).
bool is_chordal(const Graph& g);

// Components as sorted vertex lists, ordered by minimum vertex id.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Spanning tree of g[s]: BFS from the minimum id of s, neighbors visited in
// ascending id order; returns the tree edges sorted. Throws
// DisconnectedBlock if g[s] is not connected, TooSmall if s is empty.
EdgeSet spanning_tree_edges(const Graph& g, const std::vector<int>& s);

// Spanning tree of each component, concatenated. Sorted.
EdgeSet spanning_forest_edges(const Graph& g);

Graph complement(const Graph& g);

// Subgraph induced by vs (sorted ascending required). Returns the graph on
// {0..|vs|-1} plus the map local-id -> original-id (which is vs itself).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& vs);

}  // namespace contraction
