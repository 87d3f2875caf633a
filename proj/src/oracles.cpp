#include "contraction/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "contraction/errors.hpp"

namespace contraction {

bool in_target_class(const Graph& g, TargetClass cls) {
  switch (cls) {
    case TargetClass::complete:
      return is_complete(g);
    case TargetClass::split:
      return is_split(g).has_value();
    case TargetClass::chordal:
      return is_chordal(g);
  }
  return false;
}

namespace {

// C(n, k) capped at cap to keep the guard arithmetic overflow-free.
long long binom_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    if (r > cap / (n - k + i)) return cap;
    r = r * (n - k + i) / i;
    if (r >= cap) return cap;
  }
  return r;
}

}  // namespace

std::optional<std::pair<EdgeSet, int>> brute_force_contraction(const Graph& g, int k,
                                                               TargetClass cls, long long guard) {
  const EdgeSet& all = g.edges();
  int m = g.edge_count();
  if (binom_capped(m, std::min(k, m), guard + 1) > guard)
    throw TooLarge("edge-subset enumeration exceeds the tractability guard");
  int max_size = std::min(k, m);
  for (int size = 0; size <= max_size; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      EdgeSet f;
      f.reserve(size);
      for (int i : idx) f.push_back(all[i]);
      auto [q, w] = contract_edges(g, f);
      (void)w;
      if (in_target_class(q, cls)) return std::make_pair(std::move(f), size);
      int i = size - 1;
      while (i >= 0 && idx[i] == m - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Rational density(const Graph& g, const std::vector<int>& s) {
  long long pairs = static_cast<long long>(s.size()) * (static_cast<long long>(s.size()) - 1) / 2;
  if (pairs == 0) return {0, 1};
  long long inside = 0;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) ++inside;
  long long d = std::gcd(inside, pairs);
  if (d == 0) return {0, 1};
  return {inside / d, pairs / d};
}

std::pair<std::vector<int>, int> densest_k_subgraph_brute(const Graph& g, int k, long long guard) {
  int n = g.vertex_count();
  if (k > n) throw TooSmall("graph has fewer than k vertices");
  if (binom_capped(n, k, guard + 1) > guard)
    throw TooLarge("vertex-subset enumeration exceeds the tractability guard");
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> best = idx;
  int best_edges = -1;
  while (true) {
    int inside = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (g.has_edge(idx[i], idx[j])) ++inside;
    if (inside > best_edges) {
      best_edges = inside;
      best.assign(idx.begin(), idx.end());
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (best_edges < 0) best_edges = 0;  // k == 0: the empty set, zero edges
  return {best, best_edges};
}

SolutionReport verify_solution(const Graph& g, int k, const EdgeSet& f, TargetClass cls) {
  SolutionReport report;
  for (const auto& [u, v] : f) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
      return report;
  }
  report.edges_valid = true;
  auto [q, w] = contract_edges(g, f);
  (void)w;
  report.quotient_in_class = in_target_class(q, cls);
  if (report.quotient_in_class)
    report.value = std::min(static_cast<int>(f.size()), k + 1);
  return report;
}

}  // namespace contraction
