#pragma once

// Brute-force helpers shared by the unit tests. Nothing here calls the
// library's enumeration code.

#include "bifree/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace testing_support {

using Labels = std::vector<int>;

/// Every set partition of {0..n-1} as restricted growth strings.
inline std::vector<Labels> all_set_partitions(int n) {
  std::vector<Labels> out;
  Labels cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int max_label) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= max_label + 1; ++b) {
      cur[k] = b;
      rec(k + 1, std::max(max_label, b));
    }
  };
  if (n == 0) return {Labels{}};
  rec(0, -1);
  return out;
}

/// No a < b < c < d with a, c in one block and b, d in another.
inline bool crossing_free(const Labels& l) {
  const int n = static_cast<int>(l.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (l[a] == l[c] && l[b] == l[d] && l[a] != l[b]) return false;
  return true;
}

inline int count_blocks(const Labels& l) {
  return l.empty() ? 0 : *std::max_element(l.begin(), l.end()) + 1;
}

inline std::vector<int> block_sizes(const Labels& l) {
  std::vector<int> sizes(static_cast<std::size_t>(count_blocks(l)), 0);
  for (int x : l) ++sizes[x];
  return sizes;
}

/// Canonical relabelling by first appearance.
inline Labels canonical(const Labels& l) {
  std::vector<int> map(l.size() + 1, -1);
  Labels out;
  int next = 0;
  for (int x : l) {
    if (map[x] < 0) map[x] = next++;
    out.push_back(map[x]);
  }
  return out;
}

/// Connectivity of the union of two partitions given as labels.
inline bool joined_to_one(const Labels& a, const Labels& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) comp[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((a[i] == a[j] || b[i] == b[j]) && comp[i] != comp[j]) {
          const int m = std::min(comp[i], comp[j]);
          if (comp[i] != m || comp[j] != m) changed = true;
          comp[i] = comp[j] = m;
        }
  }
  for (int i = 0; i < n; ++i)
    if (comp[i] != comp[0]) return false;
  return true;
}

/// Kreweras complement by search: among all tau on the primed points with
/// pi u tau crossing-free on 1,1',2,2',..., the one with the fewest blocks.
inline Labels brute_kreweras(const Labels& pi) {
  const int n = static_cast<int>(pi.size());
  Labels best;
  int best_blocks = n + 1;
  for (const auto& tau : all_set_partitions(n)) {
    Labels merged(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
      merged[2 * k] = pi[k];
      merged[2 * k + 1] = n + tau[k];
    }
    if (crossing_free(merged) && count_blocks(tau) < best_blocks) {
      best = tau;
      best_blocks = count_blocks(tau);
    }
  }
  return best;
}

inline std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::uint64_t catalan_number(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

}  // namespace testing_support
