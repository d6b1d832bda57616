#pragma once

// Shared internals of the measure implementations. Not part of the public API.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "biceval/core.hpp"

namespace biceval::detail {

// Neumaier-compensated accumulator; keeps long summations accurate enough for
// the 1e-12 equivalence guarantees.
class KahanSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t n = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++n;
      ++ia;
      ++ib;
    }
  }
  return n;
}

inline void intersect_into(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

// Both micro-clusterings of an evaluation re-expressed over one dense element
// index space (the union of their clustered universes).
struct IndexedPair {
  std::vector<MicroObject> elements;      // sorted distinct micro-objects
  std::vector<std::vector<int>> g_clusters;  // element indices, sorted
  std::vector<std::vector<int>> c_clusters;
  std::vector<int> g_covered;  // indices of U_G (sorted)
  std::vector<int> c_covered;  // indices of U_C (sorted)
};

IndexedPair index_pair(const MicroClustering& g, const MicroClustering& c);

// memberships[x] = sorted list of cluster indices containing element x.
std::vector<std::vector<int>> memberships(const std::vector<std::vector<int>>& clusters,
                                          std::size_t element_count);

}  // namespace biceval::detail
