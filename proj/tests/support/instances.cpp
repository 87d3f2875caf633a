#include "support/instances.hpp"

#include <algorithm>
#include <random>

#include "contraction/io.hpp"

namespace testinst {

using contraction::connected_components;
using contraction::make_edge;

Graph path_graph(int n) {
  EdgeSet edges;
  for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  EdgeSet edges;
  for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
  if (n >= 3) edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  EdgeSet edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
  EdgeSet edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

SetCoverInstance fig3_setcover() {
  SetCoverInstance sc;
  sc.n_elements = 3;
  sc.sets = {{0, 1}, {0, 1, 2}, {1, 2}};
  sc.k = 1;
  return sc;
}

ColoredGraph planted_k3_host(int n) {
  std::vector<std::pair<contraction::Edge, int>> colored = {
      {{0, 1}, 0}, {{0, 2}, 1}, {{1, 2}, 2}};
  for (int v = 3; v < n; ++v) {
    colored.push_back({make_edge(v - 1, v), v % 3});
    colored.push_back({make_edge(0, v), (v + 1) % 3});
  }
  std::sort(colored.begin(), colored.end());
  ColoredGraph cg;
  cg.t = 3;
  EdgeSet edges;
  for (auto& [e, c] : colored) {
    edges.push_back(e);
    cg.color.push_back(c);
  }
  cg.graph = Graph(n, std::move(edges));
  return cg;
}

namespace {

int bounded(std::mt19937_64& rng, int n) {
  if (n <= 1) return 0;
  while (true) {
    const auto v = rng() % 8192;
    if (v < static_cast<unsigned long long>(8192 / n) * n) return static_cast<int>(v % n);
  }
}

}  // namespace

Graph seeded_connected_graph(int trial) {
  const int n = 6 + trial % 4;
  for (int offset = 0;; ++offset) {
    const unsigned long long seed = 5000ULL + 131ULL * trial + 100003ULL * offset;
    Graph g;
    switch (trial % 3) {
      case 0: g = contraction::gen_random_graph(n, seed); break;
      case 1: g = contraction::gen_perturbed_clique(n, seed); break;
      default: g = contraction::gen_perturbed_split(n, seed); break;
    }
    if (connected_components(g).size() == 1) return g;
  }
}

SetCoverInstance seeded_setcover(int trial) {
  std::mt19937_64 rng(9000 + trial);
  SetCoverInstance sc;
  sc.n_elements = 2 + bounded(rng, 5);
  const int m = 2 + bounded(rng, 5);
  sc.k = 1 + bounded(rng, 3);
  sc.sets.assign(m, {});
  std::vector<std::vector<char>> member(m, std::vector<char>(sc.n_elements, 0));
  for (int e = 0; e < sc.n_elements; ++e) member[bounded(rng, m)][e] = 1;
  for (int j = 0; j < m; ++j) {
    for (int e = 0; e < sc.n_elements; ++e) {
      if (!member[j][e] && bounded(rng, 4) == 0) member[j][e] = 1;
    }
  }
  for (int j = 0; j < m; ++j) {
    for (int e = 0; e < sc.n_elements; ++e) {
      if (member[j][e]) sc.sets[j].push_back(e);
    }
  }
  return sc;
}

EdgeSet seeded_edge_subset(const Graph& g, int trial) {
  std::mt19937_64 rng(7000 + trial);
  EdgeSet out;
  for (const auto& e : g.edges()) {
    if (rng() & 1ULL) out.push_back(e);
  }
  return out;
}

EdgeSet shuffled(const EdgeSet& f, int trial) {
  std::mt19937_64 rng(8000 + trial);
  EdgeSet out = f;
  for (int i = static_cast<int>(out.size()) - 1; i > 0; --i) {
    std::swap(out[i], out[bounded(rng, i + 1)]);
  }
  return out;
}

}  // namespace testinst
