#include "contraction/approx.hpp"

#include <algorithm>

namespace contraction {

std::vector<int> clique_deletion_2approx(const Graph& g) {
  Graph co = complement(g);
  std::vector<char> matched(g.vertex_count(), 0);
  std::vector<int> x;
  for (const auto& [u, v] : co.edges()) {
    if (matched[u] || matched[v]) continue;
    matched[u] = matched[v] = 1;
    x.push_back(u);
    x.push_back(v);
  }
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<int> split_deletion_5approx(const Graph& g) {
  // Work on shrinking induced subgraphs, translating hits back to the
  // original ids through the alive list.
  std::vector<int> alive(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;
  std::vector<int> s;
  while (true) {
    auto [sub, keep] = induced_subgraph(g, alive);
    (void)keep;
    auto hit = find_forbidden_split_subgraph(sub);
    if (!hit) break;
    std::vector<int> removed;
    for (int local : *hit) removed.push_back(alive[local]);
    for (int v : removed) s.push_back(v);
    std::vector<int> next;
    size_t r = 0;
    for (int v : alive) {
      if (r < removed.size() && removed[r] == v) {
        ++r;
        continue;
      }
      next.push_back(v);
    }
    alive = std::move(next);
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace contraction
