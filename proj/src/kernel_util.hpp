#pragma once

// Internal helpers shared by the kernelization modules.

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "contraction/errors.hpp"
#include "contraction/graph.hpp"

namespace contraction::detail {

// Calls fn(A) for every subset A of items with |A| <= d, empty set included.
// items must be sorted; subsets are emitted with ascending members.
template <typename Fn>
void for_each_subset_upto(const std::vector<int>& items, int d, Fn fn) {
  std::vector<int> a;
  auto rec = [&](auto&& self, size_t start) -> void {
    fn(const_cast<const std::vector<int>&>(a));
    if (static_cast<int>(a.size()) == d) return;
    for (size_t i = start; i < items.size(); ++i) {
      a.push_back(items[i]);
      self(self, i + 1);
      a.pop_back();
    }
  };
  rec(rec, 0);
}

inline constexpr long long kSatCap = std::numeric_limits<long long>::max() / 2;

inline long long sat_add(long long a, long long b) { return a > kSatCap - b ? kSatCap : a + b; }

inline long long sat_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a > kSatCap / b ? kSatCap : a * b;
}

// sum_{i=0..d} C(n, i), saturating at kSatCap.
inline long long sat_binom_sum(long long n, int d) {
  long long total = 0, c = 1;
  for (int i = 0; i <= d; ++i) {
    total = sat_add(total, c);
    if (i == d) break;
    long long num = n - i;
    if (num <= 0) break;  // remaining binomials are zero
    if (c > kSatCap / num) {
      total = kSatCap;
      break;
    }
    c = c * num / (i + 1);
  }
  return total;
}

// Vertices of {0..n-1} not in x (x sorted or not; ids ascending on return).
inline std::vector<int> complement_set(int n, const std::vector<int>& x) {
  std::vector<char> in_x(n, 0);
  for (int v : x) in_x[v] = 1;
  std::vector<int> y;
  for (int v = 0; v < n; ++v)
    if (!in_x[v]) y.push_back(v);
  return y;
}

inline std::vector<int> identity_map(int n) {
  std::vector<int> id(n);
  for (int v = 0; v < n; ++v) id[v] = v;
  return id;
}

// Maps a kernel edge set back through kept[] to original vertex ids.
inline EdgeSet translate_through(const EdgeSet& f, const std::vector<int>& kept) {
  EdgeSet out;
  out.reserve(f.size());
  for (const auto& [u, v] : f) out.push_back(make_edge(kept[u], kept[v]));
  std::sort(out.begin(), out.end());
  return out;
}

inline void require_kernel_edges(const Graph& kernel, const EdgeSet& f) {
  for (const auto& [u, v] : f)
    if (u < 0 || v < 0 || u >= kernel.vertex_count() || v >= kernel.vertex_count() ||
        !kernel.has_edge(u, v))
      throw InvalidKernelSolution("solution uses (" + std::to_string(u) + "," +
                                  std::to_string(v) + "), not an edge of the kernel");
}

// Lexicographically least g-edge with one endpoint in each block.
// Both blocks sorted; throws if none exists.
inline Edge least_crossing_edge(const Graph& g, const std::vector<int>& a,
                                const std::vector<int>& b) {
  bool found = false;
  Edge best{0, 0};
  for (int u : a)
    for (int v : b)
      if (g.has_edge(u, v)) {
        Edge e = make_edge(u, v);
        if (!found || e < best) {
          best = e;
          found = true;
        }
      }
  if (!found) throw AssertionViolation("expected adjacent witness sets share no edge");
  return best;
}

}  // namespace contraction::detail
