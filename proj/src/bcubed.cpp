#include "biceval/bcubed.hpp"

#include <algorithm>
#include <stdexcept>

#include "biceval/error.hpp"
#include "internal.hpp"

namespace biceval {

namespace {

double harmonic(double p, double r) { return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

// The pairwise scoring machinery shared by CICE and MOCICE, over clusterings
// re-expressed as sorted element-index sets.
class PairwiseEngine {
 public:
  PairwiseEngine(const std::vector<std::vector<int>>& g, const std::vector<std::vector<int>>& c,
                 std::size_t element_count, bool with_cii)
      : g_(g),
        c_(c),
        memb_g_(detail::memberships(g, element_count)),
        memb_c_(detail::memberships(c, element_count)),
        with_cii_(with_cii) {
    if (with_cii_) {
      jaccard_.assign(g_.size(), std::vector<double>(c_.size(), 0.0));
      for (std::size_t i = 0; i < g_.size(); ++i) {
        for (std::size_t j = 0; j < c_.size(); ++j) {
          std::size_t inter = detail::intersection_size(g_[i], c_[j]);
          if (inter == 0) continue;
          std::size_t uni = g_[i].size() + c_[j].size() - inter;
          jaccard_[i][j] = static_cast<double>(inter) / static_cast<double>(uni);
        }
      }
    }
  }

  // Precision side when candidate_side, recall side otherwise. `domain` holds
  // the element indices the outer summation runs over.
  double average_over(const std::vector<int>& domain, bool candidate_side) const {
    const auto& memb = candidate_side ? memb_g_ : memb_c_;
    const auto& clusters = candidate_side ? g_ : c_;
    detail::KahanSum outer;
    std::vector<int> cohort, shared_g, shared_c;
    for (int x : domain) {
      cohort.clear();
      for (int i : memb[static_cast<std::size_t>(x)]) {
        std::vector<int> merged;
        merged.reserve(cohort.size() + clusters[static_cast<std::size_t>(i)].size());
        std::set_union(cohort.begin(), cohort.end(), clusters[static_cast<std::size_t>(i)].begin(),
                       clusters[static_cast<std::size_t>(i)].end(), std::back_inserter(merged));
        cohort.swap(merged);
      }
      detail::KahanSum inner;
      for (int y : cohort) {
        detail::intersect_into(memb_g_[static_cast<std::size_t>(x)],
                               memb_g_[static_cast<std::size_t>(y)], shared_g);
        detail::intersect_into(memb_c_[static_cast<std::size_t>(x)],
                               memb_c_[static_cast<std::size_t>(y)], shared_c);
        std::size_t gn = shared_g.size();
        std::size_t cn = shared_c.size();
        if (gn == 0 || cn == 0) continue;  // min term is 0, CII not evaluated
        double numerator = static_cast<double>(std::min(gn, cn)) * phi(shared_g, shared_c);
        inner.add(numerator / static_cast<double>(candidate_side ? gn : cn));
      }
      outer.add(inner.value() / static_cast<double>(cohort.size()));
    }
    return outer.value() / static_cast<double>(domain.size());
  }

 private:
  double phi(const std::vector<int>& shared_g, const std::vector<int>& shared_c) const {
    if (!with_cii_) return 1.0;
    detail::KahanSum sum;
    for (int i : shared_g) {
      double best = 0.0;
      for (int j : shared_c) {
        best = std::max(best, jaccard_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      }
      sum.add(best);
    }
    return sum.value() / static_cast<double>(shared_g.size());
  }

  const std::vector<std::vector<int>>& g_;
  const std::vector<std::vector<int>>& c_;
  std::vector<std::vector<int>> memb_g_;
  std::vector<std::vector<int>> memb_c_;
  std::vector<std::vector<double>> jaccard_;
  bool with_cii_;
};

// --- object-space entry points ------------------------------------------

struct IndexedObjects {
  std::vector<ObjectId> elements;  // sorted universe objects
  std::vector<std::vector<int>> g;
  std::vector<std::vector<int>> c;
};

std::vector<std::vector<int>> index_object_clusters(const Clustering& cl,
                                                    const std::vector<ObjectId>& elements) {
  std::vector<std::vector<int>> out;
  out.reserve(cl.size());
  for (const auto& cluster : cl.clusters()) {
    std::vector<int> ix;
    ix.reserve(cluster.size());
    for (const auto& id : cluster) {
      auto it = std::lower_bound(elements.begin(), elements.end(), id);
      ix.push_back(static_cast<int>(it - elements.begin()));
    }
    out.push_back(std::move(ix));
  }
  return out;
}

IndexedObjects index_objects(const Clustering& g, const Clustering& c) {
  if (!g.universe().same_sets(c.universe())) {
    throw InvalidInputError("candidate and gold standard are defined over different universes");
  }
  IndexedObjects io;
  io.elements = g.universe().objects();
  std::sort(io.elements.begin(), io.elements.end());
  io.g = index_object_clusters(g, io.elements);
  io.c = index_object_clusters(c, io.elements);
  return io;
}

void require_coverage(const std::vector<std::vector<int>>& clusters, std::size_t n, const char* side) {
  std::vector<char> seen(n, 0);
  for (const auto& cluster : clusters) {
    for (int x : cluster) seen[static_cast<std::size_t>(x)] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!seen[x]) {
      throw CoverageError(std::string("CICE-BCubed requires full coverage: an object is in no ") + side);
    }
  }
}

std::vector<int> full_domain(std::size_t n) {
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<int>(i);
  return d;
}

BcubedScores object_space_scores(const Clustering& g, const Clustering& c, bool with_cii) {
  auto io = index_objects(g, c);
  require_coverage(io.g, io.elements.size(), "cluster");
  require_coverage(io.c, io.elements.size(), "class");
  if (io.elements.empty()) {
    throw UndefinedScoreError("CICE-BCubed is undefined on an empty universe");
  }
  PairwiseEngine engine(io.g, io.c, io.elements.size(), with_cii);
  auto domain = full_domain(io.elements.size());
  BcubedScores s;
  s.precision = engine.average_over(domain, true);
  s.recall = engine.average_over(domain, false);
  s.f1 = harmonic(s.precision, s.recall);
  return s;
}

// Shared clusters of a pair, by cluster index.
std::vector<std::size_t> shared_clusters(const ObjectId& o, const ObjectId& o2, const Clustering& cl) {
  std::vector<std::size_t> shared;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const auto& members = cl.cluster(i);
    if (std::binary_search(members.begin(), members.end(), o) &&
        std::binary_search(members.begin(), members.end(), o2)) {
      shared.push_back(i);
    }
  }
  return shared;
}

double jaccard_ids(const std::vector<ObjectId>& a, const std::vector<ObjectId>& b) {
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
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

// --- micro-space entry points --------------------------------------------

BcubedScores micro_space_scores(const MicroClustering& g, const MicroClustering& c, bool with_cii,
                                bool mocice) {
  auto ip = detail::index_pair(g, c);
  if (!mocice) {
    // CICE over micro-objects: both sides must cluster the same universe.
    if (ip.g_covered != ip.c_covered) {
      throw CoverageError("CICE-BCubed requires both sides to cluster the same element universe");
    }
    if (ip.elements.empty()) {
      throw UndefinedScoreError("CICE-BCubed is undefined on an empty universe");
    }
  } else {
    if (ip.g_covered.empty()) {
      throw UndefinedScoreError("MOCICE-BCubed precision is undefined: the candidate clusters nothing");
    }
    if (ip.c_covered.empty()) {
      throw UndefinedScoreError("MOCICE-BCubed recall is undefined: the gold standard clusters nothing");
    }
  }
  PairwiseEngine engine(ip.g_clusters, ip.c_clusters, ip.elements.size(), with_cii);
  BcubedScores s;
  s.precision = engine.average_over(ip.g_covered, true);
  s.recall = engine.average_over(ip.c_covered, false);
  s.f1 = harmonic(s.precision, s.recall);
  return s;
}

}  // namespace

double cii(const ObjectId& o, const ObjectId& o2, const Clustering& g, const Clustering& c) {
  auto sg = shared_clusters(o, o2, g);
  auto sc = shared_clusters(o, o2, c);
  if (sg.empty() || sc.empty()) {
    throw std::logic_error("CII requires the pair to co-occur in a cluster and in a class");
  }
  detail::KahanSum sum;
  for (std::size_t i : sg) {
    double best = 0.0;
    for (std::size_t j : sc) {
      best = std::max(best, jaccard_ids(g.cluster(i), c.cluster(j)));
    }
    sum.add(best);
  }
  return sum.value() / static_cast<double>(sg.size());
}

double varsigma(const ObjectId& o, const ObjectId& o2, const Clustering& g, const Clustering& c) {
  auto sg = shared_clusters(o, o2, g);
  if (sg.empty()) {
    throw std::logic_error("varsigma requires the pair to co-occur in at least one cluster");
  }
  auto sc = shared_clusters(o, o2, c);
  if (sc.empty()) return 0.0;  // min term is 0; CII not evaluated
  double m = static_cast<double>(std::min(sg.size(), sc.size()));
  return m * cii(o, o2, g, c) / static_cast<double>(sg.size());
}

double tau(const ObjectId& o, const ObjectId& o2, const Clustering& g, const Clustering& c) {
  auto sc = shared_clusters(o, o2, c);
  if (sc.empty()) {
    throw std::logic_error("tau requires the pair to co-occur in at least one class");
  }
  auto sg = shared_clusters(o, o2, g);
  if (sg.empty()) return 0.0;
  double m = static_cast<double>(std::min(sg.size(), sc.size()));
  return m * cii(o, o2, g, c) / static_cast<double>(sc.size());
}

double cice_precision(const Clustering& g, const Clustering& c) {
  return object_space_scores(g, c, true).precision;
}

double cice_recall(const Clustering& g, const Clustering& c) {
  return object_space_scores(g, c, true).recall;
}

double cice_f1(const Clustering& g, const Clustering& c) { return object_space_scores(g, c, true).f1; }

BcubedScores cice_bcubed(const Clustering& g, const Clustering& c) {
  return object_space_scores(g, c, true);
}

double bcubed_f1(const Clustering& g, const Clustering& c) { return object_space_scores(g, c, false).f1; }

BcubedScores bcubed(const Clustering& g, const Clustering& c) {
  return object_space_scores(g, c, false);
}

BcubedScores cice_bcubed(const MicroClustering& g, const MicroClustering& c) {
  return micro_space_scores(g, c, true, false);
}

BcubedScores bcubed(const MicroClustering& g, const MicroClustering& c) {
  return micro_space_scores(g, c, false, false);
}

BcubedScores mocice_bcubed(const MicroClustering& g, const MicroClustering& c) {
  return micro_space_scores(g, c, true, true);
}

BcubedScores mocice_bcubed(const Biclustering& gb, const Biclustering& cb) {
  return mocice_bcubed(micro_transform(gb), micro_transform(cb));
}

double mocice_precision(const Biclustering& gb, const Biclustering& cb) {
  return mocice_bcubed(gb, cb).precision;
}

double mocice_recall(const Biclustering& gb, const Biclustering& cb) {
  return mocice_bcubed(gb, cb).recall;
}

Score mocice_f1(const Biclustering& gb, const Biclustering& cb) {
  return Score{mocice_bcubed(gb, cb).f1, Orientation::similarity, ScoreRange::unit};
}

}  // namespace biceval
