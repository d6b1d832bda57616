#include "biceval/matching.hpp"

#include <algorithm>
#include <limits>

namespace biceval {

MatchingResult max_weight_assignment(const std::vector<std::vector<long long>>& weights) {
  const std::size_t rows = weights.size();
  const std::size_t cols = rows == 0 ? 0 : weights[0].size();
  MatchingResult result;
  if (rows == 0 || cols == 0) return result;

  long long max_w = 0;
  for (const auto& row : weights) {
    for (long long w : row) max_w = std::max(max_w, w);
  }

  // Pad to a square matrix; convert to min-cost with cost = max_w - w so that
  // padded cells (w = 0) are never preferred over real positive weights.
  const std::size_t n = std::max(rows, cols);
  auto cost = [&](std::size_t i, std::size_t j) -> long long {
    if (i < rows && j < cols) return max_w - weights[i][j];
    return max_w;
  };

  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  // Potentials-based Hungarian algorithm, O(n^3). p[j] is the row matched to
  // column j (1-based; 0 means unmatched).
  std::vector<long long> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<long long> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      std::size_t i0 = p[j0], j1 = 0;
      long long delta = kInf;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        long long cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= n; ++j) {
    std::size_t i = p[j];
    if (i == 0) continue;
    std::size_t r = i - 1, c = j - 1;
    if (r < rows && c < cols && weights[r][c] > 0) {
      result.pairs.emplace_back(r, c);
      result.total += weights[r][c];
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

}  // namespace biceval
