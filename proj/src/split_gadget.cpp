#include "contraction/split_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "contraction/errors.hpp"

namespace contraction {

std::pair<GadgetRole, int> GadgetInstance::role_of(int v) const {
  if (v < 0 || v >= graph.vertex_count()) {
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
  }
  if (v < z_copies()) return {GadgetRole::z_copy, v / params.rho};
  if (v < z_total()) return {GadgetRole::z_extra, 0};
  if (v < cap_begin()) return {GadgetRole::edge_selector, v - es_begin()};
  if (v < sv_begin()) return {GadgetRole::cap, v - cap_begin()};
  if (v < guard_begin()) return {GadgetRole::special, v - sv_begin()};
  const int owner_idx = (v - guard_begin()) / params.k_round;
  int owner;
  if (owner_idx < z_total()) {
    owner = owner_idx;
  } else if (owner_idx < z_total() + params.t) {
    owner = cap_begin() + (owner_idx - z_total());
  } else {
    owner = sv_begin() + (owner_idx - z_total() - params.t);
  }
  return {GadgetRole::guard, owner};
}

GadgetInstance build_split_gadget(const ColoredGraph& cg, int k, double delta) {
  const int n = cg.graph.vertex_count();
  const int m = cg.graph.edge_count();
  const int t = cg.t;
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (t != k * (k - 1) / 2) {
    throw BadColorCount("expected " + std::to_string(k * (k - 1) / 2) + " colors, got " +
                        std::to_string(t));
  }
  if (n < k + 1) throw TooSmall("host graph needs at least k+1 vertices");
  if (static_cast<int>(cg.color.size()) != m) {
    throw std::invalid_argument("one color per edge required");
  }
  std::vector<int> class_size(t, 0);
  for (int c : cg.color) {
    if (c < 0 || c >= t) throw std::invalid_argument("color out of range");
    ++class_size[c];
  }
  for (int c = 0; c < t; ++c) {
    if (class_size[c] == 0) throw EmptyColorClass("no edge has color " + std::to_string(c));
  }

  GadgetInstance gi;
  gi.params.k = k;
  gi.params.t = t;
  gi.params.delta = delta;
  gi.params.rho = static_cast<int>(std::ceil(delta * t / k - 1e-9));
  gi.k_prime = 2 * t + gi.params.rho * k;
  gi.params.k_round = (5 * gi.k_prime + 1) / 2 + 2;
  gi.host_n = n;

  // Selector order: colors ascending, edges lexicographic within a color.
  std::vector<std::pair<int, Edge>> by_color;
  by_color.reserve(m);
  for (int e = 0; e < m; ++e) by_color.push_back({cg.color[e], cg.graph.edges()[e]});
  std::sort(by_color.begin(), by_color.end());
  for (auto& [c, e] : by_color) {
    gi.es_colors.push_back(c);
    gi.host_edges.push_back(e);
  }

  const int z_total = gi.z_total();
  const int es_begin = gi.es_begin();
  const int cap_begin = gi.cap_begin();
  const int sv_begin = gi.sv_begin();
  const int guard_begin = gi.guard_begin();
  const int owners = z_total + 2 * t;
  const int total = guard_begin + owners * gi.params.k_round;

  EdgeSet edges;
  for (int u = 0; u < z_total; ++u) {
    for (int v = u + 1; v < z_total; ++v) edges.push_back({u, v});
  }
  const int rho = gi.params.rho;
  for (int idx = 0; idx < m; ++idx) {
    const int w = es_begin + idx;
    auto [hu, hv] = gi.host_edges[idx];
    for (int z = 0; z < gi.z_copies(); ++z) {
      const int host = z / rho;
      if (host != hu && host != hv) edges.push_back({z, w});
    }
    for (int z = gi.z_copies(); z < z_total; ++z) edges.push_back({z, w});
    edges.push_back({w, cap_begin + gi.es_colors[idx]});
    edges.push_back({w, sv_begin + gi.es_colors[idx]});
  }
  for (int c = 0; c < t; ++c) {
    for (int cc = c + 1; cc < t; ++cc) edges.push_back({sv_begin + c, sv_begin + cc});
  }
  for (int o = 0; o < owners; ++o) {
    const int owner = o < z_total           ? o
                      : o < z_total + t     ? cap_begin + (o - z_total)
                                            : sv_begin + (o - z_total - t);
    for (int g = 0; g < gi.params.k_round; ++g) {
      edges.push_back({owner, guard_begin + o * gi.params.k_round + g});
    }
  }
  gi.graph = Graph(total, std::move(edges));
  return gi;
}

EdgeSet clique_to_split_solution(const GadgetInstance& gi, const std::vector<int>& clique) {
  const int k = gi.params.k;
  std::vector<int> vs = clique;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (static_cast<int>(vs.size()) != k) {
    throw NotAColorfulClique("expected " + std::to_string(k) + " distinct vertices");
  }
  for (int v : vs) {
    if (v < 0 || v >= gi.host_n) {
      throw NotAColorfulClique("vertex out of range: " + std::to_string(v));
    }
  }

  auto selector_of = [&](Edge e) {
    auto it = std::find(gi.host_edges.begin(), gi.host_edges.end(), e);
    return it == gi.host_edges.end()
               ? -1
               : static_cast<int>(it - gi.host_edges.begin());
  };

  EdgeSet out;
  std::set<int> used_colors;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const int idx = selector_of(make_edge(vs[a], vs[b]));
      if (idx < 0) {
        throw NotAColorfulClique("vertices " + std::to_string(vs[a]) + " and " +
                                 std::to_string(vs[b]) + " are not adjacent");
      }
      if (!used_colors.insert(gi.es_colors[idx]).second) {
        throw NotAColorfulClique("two clique edges share color " +
                                 std::to_string(gi.es_colors[idx]));
      }
      const int w = gi.es_begin() + idx;
      out.push_back(make_edge(w, gi.cap_vertex(gi.es_colors[idx])));
      out.push_back(make_edge(w, gi.special_vertex(gi.es_colors[idx])));
    }
  }

  if (gi.params.rho > 0) {
    int u0 = -1;
    for (int u = 0; u < gi.host_n; ++u) {
      if (!std::binary_search(vs.begin(), vs.end(), u)) {
        u0 = u;
        break;
      }
    }
    if (u0 < 0) throw AssertionViolation("no host vertex outside the clique");
    const int z0 = gi.x_copy(u0, 0);
    for (int u : vs) {
      for (int j = 0; j < gi.params.rho; ++j) out.push_back(make_edge(gi.x_copy(u, j), z0));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<int>, EdgeSet> extract_dense_subgraph(const GadgetInstance& gi,
                                                            const EdgeSet& f) {
  const double budget = (1.25 - gi.params.delta) * gi.k_prime;
  if (static_cast<double>(f.size()) > budget + 1e-9) {
    throw BudgetExceeded("solution of size " + std::to_string(f.size()) +
                         " exceeds the extraction budget");
  }
  auto [q, w] = contract_edges(gi.graph, f);
  if (!is_split(q)) throw NotASolution("quotient is not a split graph");

  EdgeSet host_edges_out;
  for (const auto& block : w.blocks) {
    int caps = 0, zs = 0;
    std::vector<int> selectors;
    int cap_color = -1;
    for (int v : block) {
      auto [role, idx] = gi.role_of(v);
      switch (role) {
        case GadgetRole::z_copy:
        case GadgetRole::z_extra:
          ++zs;
          break;
        case GadgetRole::cap:
          ++caps;
          cap_color = idx;
          break;
        case GadgetRole::edge_selector:
          selectors.push_back(idx);
          break;
        default:
          break;
      }
    }
    if (caps != 1 || zs != 0) continue;
    if (selectors.empty()) {
      throw AssertionViolation("cap witness set has no edge selector");
    }
    if (selectors.size() > 1) {
      throw AssertionViolation("cap witness set holds two edge selectors");
    }
    if (gi.es_colors[selectors[0]] != cap_color) {
      throw AssertionViolation("edge selector color does not match its cap");
    }
    host_edges_out.push_back(gi.host_edges[selectors[0]]);
  }
  std::sort(host_edges_out.begin(), host_edges_out.end());

  std::vector<int> vertices;
  std::set<int> colors;
  for (Edge e : host_edges_out) {
    vertices.push_back(e.first);
    vertices.push_back(e.second);
    const int idx = static_cast<int>(
        std::find(gi.host_edges.begin(), gi.host_edges.end(), e) - gi.host_edges.begin());
    colors.insert(gi.es_colors[idx]);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  if (colors.size() != host_edges_out.size()) {
    throw AssertionViolation("recovered edges are not colorful");
  }
  if (static_cast<double>(vertices.size()) >
      gi.params.k / gi.params.delta + 1e-9) {
    throw AssertionViolation("recovered vertex set exceeds the size guarantee");
  }
  if (static_cast<double>(host_edges_out.size()) <
      1.5 * gi.params.delta * gi.params.t - 1e-9) {
    throw AssertionViolation("recovered edge set is below the density guarantee");
  }
  return {vertices, host_edges_out};
}

}  // namespace contraction
