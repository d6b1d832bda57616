#pragma once

#include <vector>

#include "biceval/core.hpp"
#include "biceval/matching.hpp"
#include "biceval/score.hpp"

namespace biceval {

/// Clustering Error, reported as the similarity 1 - (|U| - D_max)/|U| where U
/// is the union of both clustered universes and D_max is the total
/// intersection mass under the best one-to-one cluster-to-class matching.
/// Throws UndefinedScoreError when U is empty.
Score ce(const MicroClustering& candidate, const MicroClustering& gold);

/// The matching behind CE, exposed for inspection and oracle checks.
MatchingResult ce_matching(const MicroClustering& candidate, const MicroClustering& gold);

/// Relative Non-Intersecting Area, reported as the similarity
/// 1 - (|U| - |I|)/|U| with I the intersection of the clustered universes.
/// Throws UndefinedScoreError when U is empty.
Score rnia(const MicroClustering& candidate, const MicroClustering& gold);

/// Rand's index over unordered distinct micro-object pairs of U. Both sides
/// must be partitions of their clustered universes (overlap throws
/// NotAPartitionError); uncovered elements of U get singleton clusters.
/// Throws UndefinedScoreError when |U| < 2.
Score rand_index(const MicroClustering& candidate, const MicroClustering& gold);

/// Variation of Information (base-2 logarithm, 0*log 0 = 0), a dissimilarity
/// in [0, inf). Same partition requirement and singleton completion as
/// rand_index.
Score vi(const MicroClustering& candidate, const MicroClustering& gold);

/// |a inter b| / |a| for sorted micro-object sets. Throws UndefinedScoreError
/// when a is empty.
double set_precision(const std::vector<MicroObject>& a, const std::vector<MicroObject>& b);

/// E4SC: the F1 of the two macro-averaged per-cluster best F1 scores. Empty
/// clusters contribute nothing; throws UndefinedScoreError when either side
/// has no nonempty cluster.
Score e4sc(const MicroClustering& candidate, const MicroClustering& gold);

/// The macro-averaged best per-class F1 of `a` with respect to `b` (the two
/// components combined by e4sc).
double e4sc_macro_f1(const MicroClustering& a, const MicroClustering& b);

}  // namespace biceval
