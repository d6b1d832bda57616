#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace biceval {

/// A maximum-weight one-to-one assignment between rows (candidate clusters)
/// and columns (gold classes). `total` is D_max: the summed weight over
/// assigned pairs, maximal over all injective assignments. Zero-weight
/// assignments are omitted from `pairs`.
struct MatchingResult {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  long long total = 0;
};

/// Solves the rectangular assignment problem exactly for non-negative integer
/// weights (Hungarian algorithm on a zero-padded square matrix).
MatchingResult max_weight_assignment(const std::vector<std::vector<long long>>& weights);

}  // namespace biceval
