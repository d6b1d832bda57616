#include "internal.hpp"

namespace biceval::detail {

namespace {

std::vector<std::vector<int>> index_clusters(const MicroClustering& m,
                                             const std::vector<MicroObject>& elements) {
  std::vector<std::vector<int>> out;
  out.reserve(m.size());
  for (const auto& cluster : m.clusters()) {
    std::vector<int> ix;
    ix.reserve(cluster.size());
    for (const auto& mo : cluster) {
      auto it = std::lower_bound(elements.begin(), elements.end(), mo);
      ix.push_back(static_cast<int>(it - elements.begin()));
    }
    // cluster is sorted by micro-object, so ix is sorted as well
    out.push_back(std::move(ix));
  }
  return out;
}

std::vector<int> covered(const std::vector<std::vector<int>>& clusters, std::size_t n) {
  std::vector<char> mask(n, 0);
  for (const auto& cluster : clusters) {
    for (int x : cluster) mask[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<int> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (mask[x]) out.push_back(static_cast<int>(x));
  }
  return out;
}

}  // namespace

IndexedPair index_pair(const MicroClustering& g, const MicroClustering& c) {
  IndexedPair ip;
  auto ug = clustered_universe(g);
  auto uc = clustered_universe(c);
  ip.elements.reserve(ug.size() + uc.size());
  std::set_union(ug.begin(), ug.end(), uc.begin(), uc.end(), std::back_inserter(ip.elements));
  ip.g_clusters = index_clusters(g, ip.elements);
  ip.c_clusters = index_clusters(c, ip.elements);
  ip.g_covered = covered(ip.g_clusters, ip.elements.size());
  ip.c_covered = covered(ip.c_clusters, ip.elements.size());
  return ip;
}

std::vector<std::vector<int>> memberships(const std::vector<std::vector<int>>& clusters,
                                          std::size_t element_count) {
  std::vector<std::vector<int>> out(element_count);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    for (int x : clusters[i]) {
      out[static_cast<std::size_t>(x)].push_back(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace biceval::detail
