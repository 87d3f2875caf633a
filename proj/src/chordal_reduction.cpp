#include "contraction/chordal_reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "contraction/errors.hpp"

namespace contraction {

std::pair<ChordalRole, int> ChordalInstance::role_of(int v) const {
  const int m = static_cast<int>(source.sets.size());
  if (v < 0 || v >= graph.vertex_count()) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
  if (v < m) return {ChordalRole::set_vertex, v};
  if (v == apex()) return {ChordalRole::apex, 0};
  const int i = (v - m) / 3;
  switch ((v - m) % 3) {
    case 0: return {ChordalRole::elem_a, i};
    case 1: return {ChordalRole::elem_c, i};
    default: return {ChordalRole::elem_b, i};
  }
}

int objective_chc(const Graph& g, int k, const EdgeSet& f) {
  auto [q, w] = contract_edges(g, f);
  (void)w;
  if (!is_chordal(q)) return kInf;
  return std::min(static_cast<int>(f.size()), k + 1);
}

ChordalInstance set_cover_to_chordal(const SetCoverInstance& sc) {
  const int n = sc.n_elements;
  const int m = static_cast<int>(sc.sets.size());
  if (n < 0 || sc.k < 0) throw std::invalid_argument("negative instance parameter");

  std::vector<char> covered(n, 0);
  for (int j = 0; j < m; ++j) {
    std::vector<int> members = sc.sets[j];
    std::sort(members.begin(), members.end());
    for (std::size_t a = 0; a + 1 < members.size(); ++a) {
      if (members[a] == members[a + 1]) {
        throw std::invalid_argument("duplicate element in set " + std::to_string(j));
      }
    }
    for (int e : members) {
      if (e < 0 || e >= n) {
        throw std::invalid_argument("element out of range in set " + std::to_string(j));
      }
      covered[e] = 1;
    }
  }
  for (int e = 0; e < n; ++e) {
    if (!covered[e]) {
      throw UncoveredElement("element " + std::to_string(e) + " is in no set");
    }
  }

  ChordalInstance ci;
  ci.k = sc.k;
  ci.source = sc;
  const int apex = m + 3 * n;
  EdgeSet edges;
  for (int j = 0; j < m; ++j) {
    for (int jj = j + 1; jj < m; ++jj) edges.push_back({j, jj});
    edges.push_back({j, apex});
  }
  for (int i = 0; i < n; ++i) {
    const int a = m + 3 * i, c = a + 1, b = a + 2;
    edges.push_back({a, apex});
    edges.push_back({b, apex});
    edges.push_back({a, c});
    edges.push_back({c, b});
  }
  for (int j = 0; j < m; ++j) {
    for (int e : sc.sets[j]) edges.push_back({j, m + 3 * e + 1});
  }
  ci.graph = Graph(apex + 1, std::move(edges));
  return ci;
}

std::vector<int> chordal_solution_to_set_cover(const ChordalInstance& ci, const EdgeSet& f0) {
  const int m = static_cast<int>(ci.source.sets.size());
  const int n = ci.source.n_elements;
  std::vector<int> all(m);
  for (int j = 0; j < m; ++j) all[j] = j;

  std::set<Edge> given;
  for (auto [u, v] : f0) {
    if (u < 0 || v < 0 || u >= ci.graph.vertex_count() || v >= ci.graph.vertex_count() ||
        !ci.graph.has_edge(u, v)) {
      return all;
    }
    given.insert(make_edge(u, v));
  }
  if (static_cast<int>(given.size()) >= ci.k + 1) return all;

  // Minimum-index covering set per element; the construction guarantees one.
  std::vector<int> min_cover(n, -1);
  for (int j = m - 1; j >= 0; --j) {
    for (int e : ci.source.sets[j]) min_cover[e] = j;
  }

  const int apex = ci.apex();
  auto element_of = [&](int v) { return (v - m) / 3; };
  auto is_a = [&](int v) { return v >= m && v < apex && (v - m) % 3 == 0; };
  auto is_c = [&](int v) { return v >= m && v < apex && (v - m) % 3 == 1; };
  auto is_b = [&](int v) { return v >= m && v < apex && (v - m) % 3 == 2; };

  std::set<Edge> rewritten;
  for (Edge e : given) {
    auto [u, v] = e;
    if (v == apex && (is_a(u) || is_b(u))) {
      rewritten.insert(make_edge(min_cover[element_of(u)], apex));
    } else if (is_c(v) && is_a(u)) {
      rewritten.insert(make_edge(min_cover[element_of(v)], apex));
    } else if (is_c(u) && is_b(v)) {
      rewritten.insert(make_edge(min_cover[element_of(u)], apex));
    } else if (is_c(v) && u < m) {
      // s_j - c_i collapses to the apex edge of the same set vertex.
      rewritten.insert(make_edge(u, apex));
    } else {
      rewritten.insert(e);
    }
  }

  EdgeSet fv(rewritten.begin(), rewritten.end());
  auto [q, w] = contract_edges(ci.graph, fv);
  (void)q;
  const auto& apex_block = w.blocks[w.block_index[apex]];
  std::vector<int> picked;
  for (int v : apex_block) {
    if (v < m) picked.push_back(v);
  }
  return picked;
}

}  // namespace contraction
