#include "contraction/clique_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "contraction/approx.hpp"
#include "contraction/errors.hpp"
#include "kernel_util.hpp"

namespace contraction {

using detail::complement_set;
using detail::for_each_subset_upto;
using detail::identity_map;
using detail::least_crossing_edge;
using detail::require_kernel_edges;
using detail::translate_through;

CliqueKernelConfig CliqueKernelConfig::make(double epsilon, int k) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  CliqueKernelConfig cfg;
  cfg.epsilon = epsilon;
  cfg.k = k;
  cfg.d = std::max(1, static_cast<int>(std::ceil(1.0 / epsilon)));
  return cfg;
}

int objective_clc(const Graph& g, int k, const EdgeSet& f) {
  auto [q, w] = contract_edges(g, f);
  (void)w;
  if (!is_complete(q)) return kInf;
  return std::min(static_cast<int>(f.size()), k + 1);
}

std::vector<int> mark_m1(const Graph& g, const std::vector<int>& x, int d) {
  std::vector<int> y = complement_set(g.vertex_count(), x);
  std::set<int> marked;
  for_each_subset_upto(x, d, [&](const std::vector<int>& a) {
    for (int v : y) {
      bool dominated = true;
      for (int u : a)
        if (!g.has_edge(u, v)) {
          dominated = false;
          break;
        }
      if (dominated) {
        marked.insert(v);  // minimum-id member: y is ascending
        break;
      }
    }
  });
  return {marked.begin(), marked.end()};
}

std::vector<int> mark_m2(const Graph& g, const std::vector<int>& x, int d, int k) {
  std::vector<int> y = complement_set(g.vertex_count(), x);
  std::set<int> marked;
  for_each_subset_upto(x, d, [&](const std::vector<int>& a) {
    int quota = 2 * k + 1;
    for (int v : y) {
      if (quota == 0) break;
      bool disjoint = true;
      for (int u : a)
        if (g.has_edge(u, v)) {
          disjoint = false;
          break;
        }
      if (disjoint) {
        marked.insert(v);
        --quota;
      }
    }
  });
  return {marked.begin(), marked.end()};
}

long long clique_kernel_size_bound(int k, int d) {
  long long subsets = detail::sat_binom_sum(4LL * k, d);
  long long marks = detail::sat_mul(subsets, 2LL * k + 2);
  return detail::sat_add(4LL * k, marks);
}

namespace {

const Graph& trivial_no_instance_p4() {
  static const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  return p4;
}

}  // namespace

KernelResult reduce_clique(const Graph& g, const CliqueKernelConfig& cfg) {
  KernelResult r;
  if (connected_components(g).size() > 1) {
    // A contraction never joins components, so no edge set reaches a
    // complete quotient.
    r.kind = KernelKind::infeasible;
    r.k_out = cfg.k;
    return r;
  }
  if (g.vertex_count() <= cfg.k + 3) {
    r.kind = KernelKind::unchanged;
    r.graph = g;
    r.k_out = cfg.k;
    r.kept = identity_map(g.vertex_count());
    return r;
  }
  std::vector<int> x = clique_deletion_2approx(g);
  if (static_cast<int>(x.size()) > 4 * cfg.k) {
    r.kind = KernelKind::trivial_no;
    r.graph = trivial_no_instance_p4();
    r.k_out = 1;
    return r;
  }
  if (g.vertex_count() <= clique_kernel_size_bound(cfg.k, cfg.d)) {
    r.kind = KernelKind::unchanged;
    r.graph = g;
    r.k_out = cfg.k;
    r.kept = identity_map(g.vertex_count());
    r.partition_x = x;
    return r;
  }
  std::vector<int> keep = x;
  for (int v : mark_m1(g, x, cfg.d)) keep.push_back(v);
  for (int v : mark_m2(g, x, cfg.d, cfg.k)) keep.push_back(v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  auto [kernel, kept] = induced_subgraph(g, keep);
  r.kind = KernelKind::reduced;
  r.graph = std::move(kernel);
  r.k_out = cfg.k;
  r.kept = std::move(kept);
  r.partition_x = std::move(x);
  return r;
}

EdgeSet lift_clique(const Graph& g, const CliqueKernelConfig& cfg, const KernelResult& kr,
                    const EdgeSet& f_prime) {
  require_kernel_edges(kr.graph, f_prime);
  if (kr.kind == KernelKind::trivial_no || kr.kind == KernelKind::infeasible)
    return spanning_forest_edges(g);
  int value = objective_clc(kr.graph, kr.k_out, f_prime);
  if (value >= cfg.k + 1) return spanning_forest_edges(g);
  if (kr.kind == KernelKind::unchanged) return translate_through(f_prime, kr.kept);

  // Constructive lifting. The kernel solution's witness sets carry over to
  // g; every deleted vertex becomes a singleton. A kernel witness set fully
  // inside X that misses the neighborhood of some deleted vertex would break
  // completeness, so each such set is merged into one fixed anchor set (the
  // one holding the minimum-id kept non-X vertex) by a single crossing edge.
  auto [q, w] = contract_edges(kr.graph, f_prime);
  (void)q;
  EdgeSet lifted = translate_through(f_prime, kr.kept);

  std::vector<char> is_kept(g.vertex_count(), 0);
  for (int v : kr.kept) is_kept[v] = 1;
  std::vector<int> deleted;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!is_kept[v]) deleted.push_back(v);

  std::vector<char> in_x(g.vertex_count(), 0);
  for (int v : kr.partition_x) in_x[v] = 1;

  int anchor_vertex = -1;  // minimum-id kept vertex outside X
  for (int v : kr.kept)
    if (!in_x[v]) {
      anchor_vertex = v;
      break;
    }

  std::vector<std::vector<int>> blocks;  // kernel witness blocks, original ids
  for (const auto& block : w.blocks) {
    std::vector<int> orig;
    orig.reserve(block.size());
    for (int v : block) orig.push_back(kr.kept[v]);
    blocks.push_back(std::move(orig));
  }

  const std::vector<int>* anchor_block = nullptr;
  for (const auto& block : blocks)
    if (std::binary_search(block.begin(), block.end(), anchor_vertex)) {
      anchor_block = &block;
      break;
    }
  if (anchor_block == nullptr)
    throw AssertionViolation("kernel lost every vertex outside the deletion set");

  for (const auto& block : blocks) {
    bool inside_x = std::all_of(block.begin(), block.end(), [&](int v) { return in_x[v]; });
    if (!inside_x) continue;
    bool offender = false;
    for (int y : deleted) {
      bool touches = false;
      for (int v : g.neighbors(y))
        if (std::binary_search(block.begin(), block.end(), v)) {
          touches = true;
          break;
        }
      if (!touches) {
        offender = true;
        break;
      }
    }
    if (offender) lifted.push_back(least_crossing_edge(g, block, *anchor_block));
  }
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

}  // namespace contraction
