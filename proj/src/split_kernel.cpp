#include "contraction/split_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "contraction/approx.hpp"
#include "contraction/errors.hpp"
#include "contraction/oracles.hpp"
#include "kernel_util.hpp"

namespace contraction {

using detail::complement_set;
using detail::for_each_subset_upto;
using detail::identity_map;
using detail::least_crossing_edge;
using detail::require_kernel_edges;
using detail::translate_through;

SplitKernelConfig SplitKernelConfig::make(double epsilon, int k) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  double alpha_prime = 1.0 + epsilon / 2.0;
  return make_with_alpha(epsilon, k, (1.0 + alpha_prime) / 2.0);
}

SplitKernelConfig SplitKernelConfig::make_with_alpha(double epsilon, int k, double alpha) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  SplitKernelConfig cfg;
  cfg.epsilon = epsilon;
  cfg.k = k;
  cfg.alpha_prime = 1.0 + epsilon / 2.0;
  if (!(alpha > 1.0 && alpha < cfg.alpha_prime))
    throw std::invalid_argument("alpha must lie strictly between 1 and 1 + epsilon/2");
  cfg.alpha = alpha;
  cfg.d = std::max(2, static_cast<int>(std::ceil(1.0 / (alpha - 1.0) - 1e-9)));
  cfg.c = 1.0 / (cfg.alpha_prime - alpha);
  return cfg;
}

int objective_spc(const Graph& g, int k, const EdgeSet& f) {
  auto [q, w] = contract_edges(g, f);
  (void)w;
  if (!is_split(q)) return kInf;
  return std::min(static_cast<int>(f.size()), k + 1);
}

namespace {

// BFS spanning tree of g restricted to block (sorted), rooted at root.
EdgeSet block_tree_from(const Graph& g, const std::vector<int>& block, int root) {
  std::vector<char> in_block(g.vertex_count(), 0);
  for (int v : block) in_block[v] = 1;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  EdgeSet tree;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (!in_block[v] || seen[v]) continue;
      seen[v] = 1;
      tree.push_back(make_edge(u, v));
      queue.push_back(v);
    }
  }
  if (queue.size() != block.size())
    throw DisconnectedBlock("witness set does not induce a connected subgraph");
  std::sort(tree.begin(), tree.end());
  return tree;
}

struct NormalizedSplit {
  EdgeSet f;
  std::vector<std::vector<int>> blocks;
  std::vector<char> clique_side;  // parallel to blocks
};

// Core of normalize_split_solution; construct-side callers pass
// require_connected=false so that an empty solution on a disconnected
// kernel is still accepted (the rewrite loop never runs for it).
NormalizedSplit normalize_split_full(const Graph& g, const EdgeSet& f0, bool require_connected) {
  if (require_connected && connected_components(g).size() != 1)
    throw std::invalid_argument("normalization requires a connected graph");

  std::set<Edge> f;
  for (const auto& [u, v] : f0) f.insert(make_edge(u, v));

  // Seed the carried side assignment from the canonical partition.
  std::vector<char> on_clique(g.vertex_count(), 0);
  {
    EdgeSet fv(f.begin(), f.end());
    auto [q, w] = contract_edges(g, fv);
    auto part = is_split(q);
    if (!part) throw NotASolution("quotient is not a split graph");
    for (int qv : part->clique_side)
      for (int v : w.blocks[qv]) on_clique[v] = 1;
  }

  while (true) {
    EdgeSet fv(f.begin(), f.end());
    auto [q, w] = contract_edges(g, fv);
    (void)q;
    for (const auto& block : w.blocks)
      for (int v : block)
        if (on_clique[v] != on_clique[block.front()])
          throw AssertionViolation("witness set spans both partition sides");

    int a = -1;
    for (size_t i = 0; i < w.blocks.size(); ++i)
      if (!on_clique[w.blocks[i].front()] && w.blocks[i].size() >= 2) {
        a = static_cast<int>(i);
        break;
      }
    if (a == -1) {
      if (f.size() > f0.size())
        throw AssertionViolation("normalization grew the solution");
      NormalizedSplit out;
      out.f = fv;
      out.blocks = w.blocks;
      out.clique_side.reserve(w.blocks.size());
      for (const auto& block : w.blocks) out.clique_side.push_back(on_clique[block.front()]);
      return out;
    }

    const std::vector<int>& wa = w.blocks[a];
    int b = -1;
    for (size_t j = 0; j < w.blocks.size(); ++j) {
      if (static_cast<int>(j) == a || !on_clique[w.blocks[j].front()]) continue;
      bool adjacent = false;
      for (int u : wa) {
        for (int v : g.neighbors(u))
          if (std::binary_search(w.blocks[j].begin(), w.blocks[j].end(), v)) {
            adjacent = true;
            break;
          }
        if (adjacent) break;
      }
      if (adjacent) {
        b = static_cast<int>(j);
        break;
      }
    }
    if (b == -1)
      throw AssertionViolation("independent-side witness set has no adjacent clique-side set");

    Edge cross = least_crossing_edge(g, wa, w.blocks[b]);
    int u_a = std::binary_search(wa.begin(), wa.end(), cross.first) ? cross.first : cross.second;

    // Respan the set from the crossing endpoint, drop one leaf, reconnect.
    EdgeSet tree = block_tree_from(g, wa, u_a);
    for (auto it = f.begin(); it != f.end();) {
      bool inside = std::binary_search(wa.begin(), wa.end(), it->first) &&
                    std::binary_search(wa.begin(), wa.end(), it->second);
      it = inside ? f.erase(it) : std::next(it);
    }
    std::vector<int> degree_in_tree(g.vertex_count(), 0);
    for (const auto& [u, v] : tree) {
      ++degree_in_tree[u];
      ++degree_in_tree[v];
    }
    int leaf = -1;
    for (int v : wa)
      if (v != u_a && degree_in_tree[v] == 1) {
        leaf = v;
        break;
      }
    if (leaf == -1) throw AssertionViolation("spanning tree of a witness set has no free leaf");
    for (const auto& e : tree)
      if (e.first != leaf && e.second != leaf) f.insert(e);
    f.insert(cross);
    for (int v : wa)
      if (v != leaf) on_clique[v] = 1;
  }
}

}  // namespace

EdgeSet normalize_split_solution(const Graph& g, const EdgeSet& f) {
  return normalize_split_full(g, f, /*require_connected=*/true).f;
}

std::vector<int> mark_y(const Graph& g, const std::vector<int>& s, const std::vector<int>& y,
                        int d, int k) {
  std::set<int> marked;
  for_each_subset_upto(s, d, [&](const std::vector<int>& a) {
    if (!a.empty()) {
      int quota = k + 2;
      for (int v : y) {
        if (quota == 0) break;
        bool touched = false;
        for (int u : a)
          if (g.has_edge(u, v)) {
            touched = true;
            break;
          }
        if (touched) {
          marked.insert(v);
          --quota;
        }
      }
    }
    int best = -1;
    for (int v : y) {
      bool dominated = true;
      for (int u : a)
        if (!g.has_edge(u, v)) {
          dominated = false;
          break;
        }
      if (dominated && (best == -1 || g.degree(v) > g.degree(best))) best = v;
    }
    if (best != -1) marked.insert(best);
  });
  return {marked.begin(), marked.end()};
}

std::vector<int> mark_x(const Graph& g, const std::vector<int>& s, const std::vector<int>& x,
                        const std::vector<int>& y_marked, int d, int k) {
  std::vector<int> base;
  base.reserve(s.size() + y_marked.size());
  std::merge(s.begin(), s.end(), y_marked.begin(), y_marked.end(), std::back_inserter(base));
  std::set<int> marked;
  for_each_subset_upto(base, d, [&](const std::vector<int>& a) {
    int quota = 2;
    for (int v : x) {
      if (quota == 0) break;
      bool dominated = true;
      for (int u : a)
        if (!g.has_edge(u, v)) {
          dominated = false;
          break;
        }
      if (dominated) {
        marked.insert(v);
        --quota;
      }
    }
    quota = 2 * k + 2;
    for (int v : x) {
      if (quota == 0) break;
      bool touched = false;
      for (int u : a)
        if (g.has_edge(u, v)) {
          touched = true;
          break;
        }
      if (!touched) {
        marked.insert(v);
        --quota;
      }
    }
  });
  int quota = 2 * k + 2;
  for (int v : x) {
    if (quota == 0) break;
    if (marked.insert(v).second) --quota;
  }
  return {marked.begin(), marked.end()};
}

long long split_kernel_size_bound(int k, int d) {
  long long ymax = detail::sat_mul(k + 3LL, detail::sat_binom_sum(10LL * k, d));
  long long xmax = detail::sat_add(
      detail::sat_mul(2LL * k + 4, detail::sat_binom_sum(detail::sat_add(10LL * k, ymax), d)),
      2LL * k + 2);
  return detail::sat_add(10LL * k, detail::sat_add(ymax, xmax));
}

namespace {

const Graph& trivial_no_instance_c5() {
  static const Graph c5(5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  return c5;
}

// Largest component, ties broken towards the first (minimum-id) one.
size_t retained_component(const std::vector<std::vector<int>>& comps) {
  size_t best = 0;
  for (size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() > comps[best].size()) best = i;
  return best;
}

}  // namespace

SplitKernelResult reduce_split(const Graph& g, const SplitKernelConfig& cfg) {
  SplitKernelResult r;
  auto comps = connected_components(g);
  if (comps.empty()) {
    r.kind = KernelKind::unchanged;
    r.graph = g;
    r.k_out = cfg.k;
    return r;
  }

  // Every component except one must collapse to a single vertex, since a
  // split graph has at most one component containing an edge and quotients
  // never join components. Keeping the largest minimizes the forced cost.
  size_t retained = retained_component(comps);
  int mandatory = 0, large = 0;
  for (size_t i = 0; i < comps.size(); ++i) {
    if (static_cast<int>(comps[i].size()) >= cfg.k + 2) ++large;
    if (i != retained) mandatory += static_cast<int>(comps[i].size()) - 1;
  }
  if (large >= 2 || mandatory > cfg.k) {
    r.kind = KernelKind::trivial_no;
    r.graph = trivial_no_instance_c5();
    r.k_out = 1;
    r.mandatory_cost = mandatory;
    return r;
  }
  r.mandatory_cost = mandatory;

  auto [gr, ret] = induced_subgraph(g, comps[retained]);
  if (gr.vertex_count() <= cfg.k + 3) {
    r.kind = KernelKind::unchanged;
    r.graph = gr;
    r.k_out = cfg.k;
    r.kept = ret;
    return r;
  }

  std::vector<int> s_local = split_deletion_5approx(gr);
  if (static_cast<int>(s_local.size()) > 10 * cfg.k) {
    r.kind = KernelKind::trivial_no;
    r.graph = trivial_no_instance_c5();
    r.k_out = 1;
    return r;
  }

  std::vector<int> rest = complement_set(gr.vertex_count(), s_local);
  auto [gsp, sp_keep] = induced_subgraph(gr, rest);
  auto part = is_split(gsp);
  if (!part) throw AssertionViolation("deletion set does not leave a split graph");
  std::vector<int> x_local, y_local;
  x_local.reserve(part->clique_side.size());
  y_local.reserve(part->independent_side.size());
  for (int v : part->clique_side) x_local.push_back(sp_keep[v]);
  for (int v : part->independent_side) y_local.push_back(sp_keep[v]);

  auto to_orig = [&](const std::vector<int>& local) {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(ret[v]);
    return out;
  };

  if (gr.vertex_count() <= split_kernel_size_bound(cfg.k, cfg.d)) {
    r.kind = KernelKind::unchanged;
    r.graph = gr;
    r.k_out = cfg.k;
    r.kept = ret;
    r.part_s = to_orig(s_local);
    r.part_x = to_orig(x_local);
    r.part_y = to_orig(y_local);
    return r;
  }

  std::vector<int> y_kept = mark_y(gr, s_local, y_local, cfg.d, cfg.k);
  std::vector<int> x_kept = mark_x(gr, s_local, x_local, y_kept, cfg.d, cfg.k);
  std::vector<int> keep = s_local;
  keep.insert(keep.end(), y_kept.begin(), y_kept.end());
  keep.insert(keep.end(), x_kept.begin(), x_kept.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  auto [kernel, kept_local] = induced_subgraph(gr, keep);
  r.kind = KernelKind::reduced;
  r.graph = std::move(kernel);
  r.k_out = cfg.k;
  r.kept = to_orig(kept_local);
  r.part_s = to_orig(s_local);
  r.part_x = to_orig(x_kept);
  r.part_y = to_orig(y_kept);
  return r;
}

EdgeSet lift_split_construct(const Graph& g, const SplitKernelConfig& cfg,
                             const SplitKernelResult& kr, const EdgeSet& f_prime) {
  require_kernel_edges(kr.graph, f_prime);
  if (kr.kind != KernelKind::unchanged && kr.kind != KernelKind::reduced)
    throw std::invalid_argument("constructive lifting needs a kernelized instance");
  if (static_cast<int>(f_prime.size()) > kr.k_out)
    throw InvalidKernelSolution("kernel solution exceeds the budget");
  {
    auto [q, w] = contract_edges(kr.graph, f_prime);
    (void)w;
    if (!is_split(q)) throw InvalidKernelSolution("kernel solution quotient is not split");
  }

  auto comps = connected_components(g);
  size_t retained = retained_component(comps);
  EdgeSet out;
  for (size_t i = 0; i < comps.size(); ++i)
    if (i != retained)
      for (const auto& e : spanning_tree_edges(g, comps[i])) out.push_back(e);

  auto finish = [&](EdgeSet lifted) {
    out.insert(out.end(), lifted.begin(), lifted.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    auto [q, w] = contract_edges(g, out);
    (void)w;
    if (!is_split(q)) throw AssertionViolation("lifted solution quotient is not split");
    return out;
  };

  if (kr.kind == KernelKind::unchanged) return finish(translate_through(f_prime, kr.kept));

  // The kernel solution's witness sets carry over; deleted vertices return
  // as singletons, clique-side ones adjacent to all of X by definition.
  // Two defects can appear and are repaired with one edge each:
  //   (i) a clique-side witness set avoiding every marked clique vertex that
  //       misses some deleted clique vertex's neighborhood is merged into
  //       the first clique-side set holding a marked clique vertex;
  //  (ii) the at most one independent-side set adjacent to a deleted
  //       independent vertex (it must hold a marked clique vertex) is
  //       merged into an adjacent clique-side set.
  NormalizedSplit norm = normalize_split_full(kr.graph, f_prime, /*require_connected=*/false);
  EdgeSet lifted = translate_through(norm.f, kr.kept);
  std::vector<std::vector<int>> blocks;
  blocks.reserve(norm.blocks.size());
  for (const auto& block : norm.blocks) {
    std::vector<int> orig;
    orig.reserve(block.size());
    for (int v : block) orig.push_back(kr.kept[v]);
    blocks.push_back(std::move(orig));
  }

  const std::vector<int>& ret = comps[retained];
  std::vector<char> is_kept(g.vertex_count(), 0);
  for (int v : kr.kept) is_kept[v] = 1;
  std::vector<char> in_s(g.vertex_count(), 0);
  for (int v : kr.part_s) in_s[v] = 1;
  std::vector<char> in_x_mark(g.vertex_count(), 0);
  for (int v : kr.part_x) in_x_mark[v] = 1;

  // Recompute the split sides of the retained component minus the deletion
  // set to classify the deleted vertices.
  std::vector<int> s_local;
  s_local.reserve(kr.part_s.size());
  for (int v : kr.part_s)
    s_local.push_back(
        static_cast<int>(std::lower_bound(ret.begin(), ret.end(), v) - ret.begin()));
  auto [gr, ret2] = induced_subgraph(g, ret);
  (void)ret2;
  std::vector<int> rest = complement_set(gr.vertex_count(), s_local);
  auto [gsp, sp_keep] = induced_subgraph(gr, rest);
  auto part = is_split(gsp);
  if (!part) throw AssertionViolation("deletion set does not leave a split graph");
  std::vector<char> on_x(g.vertex_count(), 0);
  for (int v : part->clique_side) on_x[ret[sp_keep[v]]] = 1;

  std::vector<int> deleted_x, deleted_y;
  for (int v : ret) {
    if (is_kept[v]) continue;
    if (in_s[v]) throw AssertionViolation("deletion set vertex missing from kernel");
    (on_x[v] ? deleted_x : deleted_y).push_back(v);
  }

  auto holds_marked_clique_vertex = [&](const std::vector<int>& block) {
    for (int v : block)
      if (in_x_mark[v]) return true;
    return false;
  };
  auto adjacent_to_block = [&](int v, const std::vector<int>& block) {
    for (int u : g.neighbors(v))
      if (std::binary_search(block.begin(), block.end(), u)) return true;
    return false;
  };

  if (!deleted_x.empty()) {
    int anchor = -1;
    for (size_t i = 0; i < blocks.size(); ++i)
      if (norm.clique_side[i] && holds_marked_clique_vertex(blocks[i])) {
        anchor = static_cast<int>(i);
        break;
      }
    if (anchor == -1)
      throw AssertionViolation("no clique-side witness set holds a marked clique vertex");
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (!norm.clique_side[i] || static_cast<int>(i) == anchor) continue;
      if (holds_marked_clique_vertex(blocks[i])) continue;
      bool offender = false;
      for (int x : deleted_x)
        if (!adjacent_to_block(x, blocks[i])) {
          offender = true;
          break;
        }
      if (!offender) continue;
      if (static_cast<int>(blocks[i].size()) <= cfg.d)
        throw AssertionViolation("undersized witness set misses a deleted clique vertex");
      lifted.push_back(least_crossing_edge(g, blocks[i], blocks[anchor]));
    }
  }

  bool repaired = false;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (norm.clique_side[i]) continue;
    bool violated = false;
    for (int y : deleted_y)
      if (adjacent_to_block(y, blocks[i])) {
        violated = true;
        break;
      }
    if (!violated) continue;
    if (!holds_marked_clique_vertex(blocks[i]))
      throw AssertionViolation(
          "independent-side witness set without a marked clique vertex touches a deleted vertex");
    if (repaired)
      throw AssertionViolation("two independent-side witness sets hold marked clique vertices");
    int b = -1;
    for (size_t j = 0; j < blocks.size(); ++j) {
      if (!norm.clique_side[j]) continue;
      bool adjacent = false;
      for (int u : blocks[i])
        if (adjacent_to_block(u, blocks[j])) {
          adjacent = true;
          break;
        }
      if (adjacent) {
        b = static_cast<int>(j);
        break;
      }
    }
    if (b == -1)
      throw AssertionViolation("independent-side witness set has no adjacent clique-side set");
    lifted.push_back(least_crossing_edge(g, blocks[i], blocks[b]));
    repaired = true;
  }

  return finish(std::move(lifted));
}

EdgeSet lift_split(const Graph& g, const SplitKernelConfig& cfg, const SplitKernelResult& kr,
                   const EdgeSet& f_prime) {
  require_kernel_edges(kr.graph, f_prime);
  if (kr.kind == KernelKind::trivial_no || kr.kind == KernelKind::infeasible)
    return spanning_forest_edges(g);
  int value = objective_spc(kr.graph, kr.k_out, f_prime);
  if (value > kr.k_out) return spanning_forest_edges(g);
  if (static_cast<double>(f_prime.size()) + 1e-12 >= cfg.c)
    return lift_split_construct(g, cfg, kr, f_prime);
  int cap = std::min(cfg.k, static_cast<int>(std::ceil(cfg.alpha * cfg.c - 1e-9)));
  if (auto best = brute_force_contraction(g, cap, TargetClass::split)) return best->first;
  return spanning_forest_edges(g);
}

}  // namespace contraction
