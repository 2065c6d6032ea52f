#pragma once

// Test-only oracles, kept independent of the library's construction paths.

#include <cstdint>
#include <vector>

#include "kneser/polygon.hpp"

namespace kneser::testing {

// All diagonals of the n-gon.
inline std::vector<Diagonal> all_diagonals(int n) {
  std::vector<Diagonal> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      out.push_back(Diagonal{i, j});
    }
  }
  return out;
}

// Brute-force enumeration: filter every (n-3)-subset of Diag(n) for
// pairwise noncrossing. Exponential; fine for n <= 7.
inline std::vector<Triangulation> triangulations_by_subset_filter(int n) {
  std::vector<Diagonal> diag = all_diagonals(n);
  const int want = n - 3;
  std::vector<Triangulation> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == want) {
      Triangulation t;
      t.n = n;
      for (int idx : pick) t.diagonals.push_back(diag[idx]);
      out.push_back(t);
      return;
    }
    for (int k = from; k < static_cast<int>(diag.size()); ++k) {
      bool ok = true;
      for (int idx : pick) {
        if (crosses(diag[idx], diag[k])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pick.push_back(k);
        self(self, k + 1);
        pick.pop_back();
      }
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Catalan numbers straight from the convolution recurrence.
inline std::uint64_t catalan_by_recurrence(int m) {
  std::vector<std::uint64_t> c(m + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= m; ++k) {
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c[m];
}

}  // namespace kneser::testing
