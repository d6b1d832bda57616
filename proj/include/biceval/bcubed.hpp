#pragma once

#include "biceval/core.hpp"
#include "biceval/score.hpp"

namespace biceval {

struct BcubedScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Cluster Identity Index: the average, over the candidate clusters shared by
/// o and o', of the best Jaccard coefficient against the classes shared by
/// them. Both shared sets must be nonempty (callers guard; violations throw
/// std::logic_error).
double cii(const ObjectId& o, const ObjectId& o2, const Clustering& g, const Clustering& c);

/// Pairwise precision score: min(|G(o,o')|, |C(o,o')|) * CII / |G(o,o')|.
/// Zero when the pair never co-occurs in the gold standard; requires
/// |G(o,o')| >= 1.
double varsigma(const ObjectId& o, const ObjectId& o2, const Clustering& g, const Clustering& c);

/// Pairwise recall score: min(|G(o,o')|, |C(o,o')|) * CII / |C(o,o')|.
/// Zero when the pair never co-occurs in the candidate; requires
/// |C(o,o')| >= 1.
double tau(const ObjectId& o, const ObjectId& o2, const Clustering& g, const Clustering& c);

/// CICE-BCubed over traditional clusterings. Requires both clusterings to
/// cover the same universe (every object in at least one cluster and one
/// class); throws CoverageError otherwise.
double cice_precision(const Clustering& g, const Clustering& c);
double cice_recall(const Clustering& g, const Clustering& c);
double cice_f1(const Clustering& g, const Clustering& c);
BcubedScores cice_bcubed(const Clustering& g, const Clustering& c);

/// Plain (extended) BCubed: the CICE pipeline with the Cluster Identity Index
/// fixed to 1. Same coverage requirements as CICE.
double bcubed_f1(const Clustering& g, const Clustering& c);
BcubedScores bcubed(const Clustering& g, const Clustering& c);

/// CICE-BCubed applied directly to micro-clusterings; both sides must cluster
/// exactly the same micro-object universe.
BcubedScores cice_bcubed(const MicroClustering& g, const MicroClustering& c);
BcubedScores bcubed(const MicroClustering& g, const MicroClustering& c);

/// MOCICE-BCubed: the CICE machinery on micro-clusterings, with precision
/// averaged over the candidate's clustered micro-objects and recall over the
/// gold standard's. Coverage of O x F is not required. Throws
/// UndefinedScoreError when the respective clustered universe is empty.
double mocice_precision(const Biclustering& gb, const Biclustering& cb);
double mocice_recall(const Biclustering& gb, const Biclustering& cb);
Score mocice_f1(const Biclustering& gb, const Biclustering& cb);
BcubedScores mocice_bcubed(const Biclustering& gb, const Biclustering& cb);

/// Same, starting from already-transformed micro-clusterings.
BcubedScores mocice_bcubed(const MicroClustering& g, const MicroClustering& c);

}  // namespace biceval
