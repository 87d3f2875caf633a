#include "contraction/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "contraction/errors.hpp"

namespace contraction {

Graph::Graph(int n, EdgeSet edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = (&nb == &adj_[u]) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), w);
}

WitnessStructure WitnessStructure::from_blocks(int n, std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty witness block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  WitnessStructure w;
  w.rep.assign(n, -1);
  w.block_index.assign(n, -1);
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    for (int v : blocks[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("witness vertex out of range");
      if (w.rep[v] != -1) throw std::invalid_argument("witness blocks overlap");
      w.rep[v] = blocks[i].front();
      w.block_index[v] = i;
    }
  }
  for (int v = 0; v < n; ++v)
    if (w.rep[v] == -1) throw std::invalid_argument("witness blocks do not cover all vertices");
  w.blocks = std::move(blocks);
  return w;
}

WitnessStructure WitnessStructure::singletons(int n) {
  std::vector<std::vector<int>> blocks(n);
  for (int v = 0; v < n; ++v) blocks[v] = {v};
  return from_blocks(n, std::move(blocks));
}

namespace {

// Quotient of g under a complete block assignment (vertex -> block index,
// blocks numbered by ascending minimum id).
Graph quotient_graph(const Graph& g, const WitnessStructure& w) {
  EdgeSet qedges;
  for (const auto& [u, v] : g.edges()) {
    int bu = w.block_index[u], bv = w.block_index[v];
    if (bu != bv) qedges.push_back(make_edge(bu, bv));
  }
  std::sort(qedges.begin(), qedges.end());
  qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
  return Graph(w.block_count(), std::move(qedges));
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::pair<Graph, WitnessStructure> contract_edges(const Graph& g, const EdgeSet& f) {
  int n = g.vertex_count();
  UnionFind uf(n);
  for (const auto& [a, b] : f) {
    int u = std::min(a, b), v = std::max(a, b);
    if (u < 0 || v >= n || !g.has_edge(u, v))
      throw NonEdgeInF("(" + std::to_string(a) + "," + std::to_string(b) +
                       ") is not an edge of the graph");
    uf.unite(u, v);
  }
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> blocks;
  for (int r = 0; r < n; ++r)
    if (!members[r].empty()) blocks.push_back(std::move(members[r]));
  auto w = WitnessStructure::from_blocks(n, std::move(blocks));
  return {quotient_graph(g, w), std::move(w)};
}

Graph quotient_by_witness(const Graph& g, const WitnessStructure& w) {
  // Each block must be connected in g, otherwise it is not realizable by
  // contractions.
  for (const auto& block : w.blocks) {
    if (block.size() <= 1) continue;
    std::vector<char> in_block(g.vertex_count(), 0), seen(g.vertex_count(), 0);
    for (int v : block) in_block[v] = 1;
    std::queue<int> q;
    q.push(block.front());
    seen[block.front()] = 1;
    size_t reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (in_block[v] && !seen[v]) {
          seen[v] = 1;
          ++reached;
          q.push(v);
        }
    }
    if (reached != block.size())
      throw DisconnectedBlock("witness block starting at " + std::to_string(block.front()) +
                              " does not induce a connected subgraph");
  }
  return quotient_graph(g, w);
}

bool is_complete(const Graph& g) {
  int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

std::optional<SplitPartition> is_split(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  // Degree-sequence split criterion with the maximal threshold index h:
  // d_1 >= ... >= d_n is split iff sum_{i<=h} d_i = h(h-1) + sum_{i>h} d_i
  // where h = max{ i : d_i >= i-1 }. The first h vertices then form the
  // clique side, which is exactly the swing-to-clique convention.
  int h = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(order[i - 1]) >= i - 1) h = i;
  long long lhs = 0, rhs = static_cast<long long>(h) * (h - 1);
  for (int i = 0; i < n; ++i) {
    if (i < h)
      lhs += g.degree(order[i]);
    else
      rhs += g.degree(order[i]);
  }
  if (lhs != rhs) return std::nullopt;
  SplitPartition p;
  p.clique_side.assign(order.begin(), order.begin() + h);
  p.independent_side.assign(order.begin() + h, order.end());
  std::sort(p.clique_side.begin(), p.clique_side.end());
  std::sort(p.independent_side.begin(), p.independent_side.end());
  for (size_t i = 0; i < p.clique_side.size(); ++i)
    for (size_t j = i + 1; j < p.clique_side.size(); ++j)
      if (!g.has_edge(p.clique_side[i], p.clique_side[j]))
        throw AssertionViolation("degree-sequence split partition is not a clique");
  for (size_t i = 0; i < p.independent_side.size(); ++i)
    for (size_t j = i + 1; j < p.independent_side.size(); ++j)
      if (g.has_edge(p.independent_side[i], p.independent_side[j]))
        throw AssertionViolation("degree-sequence split partition is not independent");
  return p;
}

namespace {

// g[s] for |s| == 4: C4 means 4 edges all of degree two; 2K2 means exactly
// two disjoint edges.
bool induces_c4_or_2k2(const Graph& g, const int* s) {
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g.has_edge(s[i], s[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  if (edges == 4) return deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2;
  if (edges == 2) return deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1;
  return false;
}

bool induces_c5(const Graph& g, const int* s) {
  int edges = 0;
  int deg[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (g.has_edge(s[i], s[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
  if (edges != 5) return false;
  for (int i = 0; i < 5; ++i)
    if (deg[i] != 2) return false;
  // 2-regular on 5 vertices with 5 edges is a single 5-cycle.
  return true;
}

template <typename Check>
std::optional<std::vector<int>> first_subset(const Graph& g, int size, Check check) {
  int n = g.vertex_count();
  if (n < size) return std::nullopt;
  std::vector<int> idx(size);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (check(g, idx.data())) return std::vector<int>(idx.begin(), idx.end());
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<std::vector<int>> find_forbidden_split_subgraph(const Graph& g) {
  auto four = first_subset(g, 4, induces_c4_or_2k2);
  auto five = first_subset(g, 5, induces_c5);
  if (!four) return five;
  if (!five) return four;
  // Lexicographically least as sequences (a shorter prefix wins).
  return std::lexicographical_compare(five->begin(), five->end(), four->begin(), four->end())
             ? five
             : four;
}

bool is_chordal(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return true;
  // Maximum cardinality search; ties broken by minimum id.
  std::vector<int> weight(n, 0), pos(n, -1), order;
  std::vector<char> visited(n, 0);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!visited[v] && (best == -1 || weight[v] > weight[best])) best = v;
    visited[best] = 1;
    pos[best] = n - 1 - step;  // elimination position: picked first = eliminated last
    order.push_back(best);
    for (int u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }
  // Perfect elimination check: for every vertex, its neighbors that come
  // later in elimination order must all be adjacent to the earliest of them.
  for (int v = 0; v < n; ++v) {
    int parent = -1;
    for (int u : g.neighbors(v))
      if (pos[u] > pos[v] && (parent == -1 || pos[u] < pos[parent])) parent = u;
    if (parent == -1) continue;
    for (int u : g.neighbors(v))
      if (pos[u] > pos[v] && u != parent && !g.has_edge(parent, u)) return false;
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

EdgeSet spanning_tree_edges(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) throw TooSmall("spanning tree of an empty vertex set");
  std::vector<char> in_s(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (int v : s) in_s[v] = 1;
  int root = *std::min_element(s.begin(), s.end());
  EdgeSet tree;
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (!in_s[v] || seen[v]) continue;
      seen[v] = 1;
      ++reached;
      tree.push_back(make_edge(u, v));
      q.push(v);
    }
  }
  if (reached != s.size())
    throw DisconnectedBlock("vertex set is not connected; no spanning tree exists");
  std::sort(tree.begin(), tree.end());
  return tree;
}

EdgeSet spanning_forest_edges(const Graph& g) {
  EdgeSet forest;
  for (const auto& comp : connected_components(g)) {
    auto tree = spanning_tree_edges(g, comp);
    forest.insert(forest.end(), tree.begin(), tree.end());
  }
  std::sort(forest.begin(), forest.end());
  return forest;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  EdgeSet edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const std::vector<int>& vs) {
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
    if (i > 0 && vs[i - 1] >= vs[i]) throw std::invalid_argument("vertex set not sorted");
    local[vs[i]] = i;
  }
  EdgeSet edges;
  for (const auto& [u, v] : g.edges())
    if (local[u] != -1 && local[v] != -1) edges.emplace_back(local[u], local[v]);
  return {Graph(static_cast<int>(vs.size()), std::move(edges)), vs};
}

}  // namespace contraction
