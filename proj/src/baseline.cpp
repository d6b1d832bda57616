#include "biceval/baseline.hpp"

#include <algorithm>
#include <cmath>

#include "biceval/error.hpp"
#include "internal.hpp"

namespace biceval {

namespace {

std::vector<std::vector<long long>> intersection_weights(const detail::IndexedPair& ip) {
  std::vector<std::vector<long long>> w(ip.g_clusters.size(),
                                        std::vector<long long>(ip.c_clusters.size(), 0));
  for (std::size_t i = 0; i < ip.g_clusters.size(); ++i) {
    for (std::size_t j = 0; j < ip.c_clusters.size(); ++j) {
      w[i][j] = static_cast<long long>(detail::intersection_size(ip.g_clusters[i], ip.c_clusters[j]));
    }
  }
  return w;
}

void require_nonempty_union(const detail::IndexedPair& ip, const char* measure) {
  if (ip.elements.empty()) {
    throw UndefinedScoreError(std::string(measure) + " is undefined: both clustered universes are empty");
  }
}

// CE is defined on non-overlapping clusterings; with overlap the matched
// intersection mass can exceed |U| and the score leaves [0, 1].
void require_disjoint(const std::vector<std::vector<int>>& clusters, std::size_t element_count,
                      const char* side) {
  std::vector<char> seen(element_count, 0);
  for (const auto& cluster : clusters) {
    for (int x : cluster) {
      if (seen[static_cast<std::size_t>(x)]) {
        throw NotAPartitionError(std::string("the ") + side +
                                 " clustering has overlapping clusters; CE requires disjoint clusters");
      }
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
}

// Partition labels over the indexed element space after singleton completion:
// label[x] < cluster_count for covered elements; uncovered elements get fresh
// labels. Throws NotAPartitionError when clusters overlap.
struct PartitionLabels {
  std::vector<int> label;
  std::vector<long long> size;  // per label
};

PartitionLabels complete_partition(const std::vector<std::vector<int>>& clusters,
                                   std::size_t element_count, const char* side) {
  PartitionLabels pl;
  pl.label.assign(element_count, -1);
  pl.size.assign(clusters.size(), 0);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (int x : clusters[i]) {
      if (pl.label[static_cast<std::size_t>(x)] != -1) {
        throw NotAPartitionError(std::string("the ") + side +
                                 " clustering has overlapping clusters; Rand/VI require partitions");
      }
      pl.label[static_cast<std::size_t>(x)] = static_cast<int>(i);
      ++pl.size[i];
    }
  }
  for (std::size_t x = 0; x < element_count; ++x) {
    if (pl.label[x] == -1) {
      pl.label[x] = static_cast<int>(pl.size.size());
      pl.size.push_back(1);
    }
  }
  return pl;
}

long long pairs_of(long long n) { return n * (n - 1) / 2; }

// Joint counts n_ij over the completed partitions, sparse.
std::vector<std::pair<std::pair<int, int>, long long>> joint_counts(const PartitionLabels& g,
                                                                    const PartitionLabels& c) {
  std::vector<std::pair<int, int>> cells(g.label.size());
  for (std::size_t x = 0; x < g.label.size(); ++x) {
    cells[x] = {g.label[x], c.label[x]};
  }
  std::sort(cells.begin(), cells.end());
  std::vector<std::pair<std::pair<int, int>, long long>> out;
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    while (j < cells.size() && cells[j] == cells[i]) ++j;
    out.push_back({cells[i], static_cast<long long>(j - i)});
    i = j;
  }
  return out;
}

}  // namespace

MatchingResult ce_matching(const MicroClustering& candidate, const MicroClustering& gold) {
  auto ip = detail::index_pair(candidate, gold);
  return max_weight_assignment(intersection_weights(ip));
}

Score ce(const MicroClustering& candidate, const MicroClustering& gold) {
  auto ip = detail::index_pair(candidate, gold);
  require_nonempty_union(ip, "CE");
  require_disjoint(ip.g_clusters, ip.elements.size(), "candidate");
  require_disjoint(ip.c_clusters, ip.elements.size(), "gold");
  auto matching = max_weight_assignment(intersection_weights(ip));
  double n = static_cast<double>(ip.elements.size());
  double dissim = (n - static_cast<double>(matching.total)) / n;
  return Score{1.0 - dissim, Orientation::similarity, ScoreRange::unit};
}

Score rnia(const MicroClustering& candidate, const MicroClustering& gold) {
  auto ip = detail::index_pair(candidate, gold);
  require_nonempty_union(ip, "RNIA");
  std::size_t inter = detail::intersection_size(ip.g_covered, ip.c_covered);
  double n = static_cast<double>(ip.elements.size());
  double dissim = (n - static_cast<double>(inter)) / n;
  return Score{1.0 - dissim, Orientation::similarity, ScoreRange::unit};
}

Score rand_index(const MicroClustering& candidate, const MicroClustering& gold) {
  auto ip = detail::index_pair(candidate, gold);
  auto g = complete_partition(ip.g_clusters, ip.elements.size(), "candidate");
  auto c = complete_partition(ip.c_clusters, ip.elements.size(), "gold");
  long long n = static_cast<long long>(ip.elements.size());
  if (n < 2) {
    throw UndefinedScoreError("Rand is undefined: fewer than two micro-objects in U");
  }
  long long in_g = 0, in_c = 0, n11 = 0;
  for (long long s : g.size) in_g += pairs_of(s);
  for (long long s : c.size) in_c += pairs_of(s);
  for (const auto& [cell, count] : joint_counts(g, c)) n11 += pairs_of(count);
  long long total = pairs_of(n);
  long long n00 = total - in_g - in_c + n11;
  return Score{static_cast<double>(n00 + n11) / static_cast<double>(total), Orientation::similarity,
               ScoreRange::unit};
}

Score vi(const MicroClustering& candidate, const MicroClustering& gold) {
  auto ip = detail::index_pair(candidate, gold);
  auto g = complete_partition(ip.g_clusters, ip.elements.size(), "candidate");
  auto c = complete_partition(ip.c_clusters, ip.elements.size(), "gold");
  if (ip.elements.empty()) {
    throw UndefinedScoreError("VI is undefined: both clustered universes are empty");
  }
  detail::KahanSum sum;
  for (const auto& [cell, count] : joint_counts(g, c)) {
    double gi = static_cast<double>(g.size[static_cast<std::size_t>(cell.first)]);
    double cj = static_cast<double>(c.size[static_cast<std::size_t>(cell.second)]);
    double nij = static_cast<double>(count);
    sum.add(nij * std::log2(gi * cj / (nij * nij)));
  }
  double value = sum.value() / static_cast<double>(ip.elements.size());
  // joint cells with n_ij = 0 never appear, which realises 0*log(.) = 0
  return Score{std::max(value, 0.0), Orientation::dissimilarity, ScoreRange::nonnegative};
}

double set_precision(const std::vector<MicroObject>& a, const std::vector<MicroObject>& b) {
  if (a.empty()) {
    throw UndefinedScoreError("set precision is undefined for an empty first argument");
  }
  std::size_t inter = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++inter;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(inter) / static_cast<double>(a.size());
}

namespace {

double macro_f1_indexed(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b,
                        const char* side) {
  detail::KahanSum sum;
  std::size_t nonempty = 0;
  for (const auto& cluster : a) {
    if (cluster.empty()) continue;  // empty clusters contribute nothing
    ++nonempty;
    // ties in the max are irrelevant: only the value enters the average
    double best = 0.0;
    for (const auto& other : b) {
      if (other.empty()) continue;
      std::size_t inter = detail::intersection_size(cluster, other);
      if (inter == 0) continue;
      double f1 = 2.0 * static_cast<double>(inter) /
                  static_cast<double>(cluster.size() + other.size());
      best = std::max(best, f1);
    }
    sum.add(best);
  }
  if (nonempty == 0) {
    throw UndefinedScoreError(std::string("E4SC is undefined: the ") + side +
                              " clustering has no nonempty cluster");
  }
  return sum.value() / static_cast<double>(nonempty);
}

}  // namespace

double e4sc_macro_f1(const MicroClustering& a, const MicroClustering& b) {
  auto ip = detail::index_pair(a, b);
  return macro_f1_indexed(ip.g_clusters, ip.c_clusters, "first");
}

Score e4sc(const MicroClustering& candidate, const MicroClustering& gold) {
  auto ip = detail::index_pair(candidate, gold);
  double m1 = macro_f1_indexed(ip.g_clusters, ip.c_clusters, "candidate");
  double m2 = macro_f1_indexed(ip.c_clusters, ip.g_clusters, "gold");
  double value = (m1 + m2) == 0.0 ? 0.0 : 2.0 * m1 * m2 / (m1 + m2);
  return Score{value, Orientation::similarity, ScoreRange::unit};
}

}  // namespace biceval
