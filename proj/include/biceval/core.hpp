#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "biceval/error.hpp"

namespace biceval {

using ObjectId = std::string;
using FeatureId = std::string;

/// The pair (O, F) over which clusterings and biclusterings are defined.
/// Ids are opaque strings; the library never does arithmetic on them.
class Universe {
 public:
  /// Throws InvalidInputError if either id list contains duplicates.
  Universe(std::vector<ObjectId> objects, std::vector<FeatureId> features);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t feature_count() const { return features_.size(); }
  const std::vector<ObjectId>& objects() const { return objects_; }
  const std::vector<FeatureId>& features() const { return features_; }

  bool has_object(const ObjectId& id) const { return object_index_.count(id) != 0; }
  bool has_feature(const FeatureId& id) const { return feature_index_.count(id) != 0; }

  /// True when both universes declare the same object and feature sets
  /// (declaration order is irrelevant).
  bool same_sets(const Universe& other) const;

 private:
  std::vector<ObjectId> objects_;
  std::vector<FeatureId> features_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> feature_index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<ObjectId> objects, std::vector<FeatureId> features);

/// A traditional clustering: a positional list of object subsets. Clusters may
/// overlap, need not cover the universe, and equal clusters at different
/// positions are distinct entities.
class Clustering {
 public:
  /// Members are sorted at construction; duplicates within one cluster or ids
  /// outside the universe throw InvalidInputError.
  Clustering(UniversePtr universe, std::vector<std::vector<ObjectId>> clusters);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::size_t size() const { return clusters_.size(); }
  const std::vector<ObjectId>& cluster(std::size_t i) const { return clusters_[i]; }
  const std::vector<std::vector<ObjectId>>& clusters() const { return clusters_; }

  bool operator==(const Clustering& other) const { return clusters_ == other.clusters_; }

 private:
  UniversePtr universe_;
  std::vector<std::vector<ObjectId>> clusters_;  // each sorted, duplicate-free
};

/// One bicluster: an object subset paired with the feature subspace in which
/// it is coherent. Both parts are kept sorted and duplicate-free.
struct Bicluster {
  std::vector<ObjectId> objects;
  std::vector<FeatureId> features;

  bool operator==(const Bicluster&) const = default;
};

/// A biclustering: a positional list of biclusters. Overlap is allowed in both
/// spaces and coverage of O or F is not required.
class Biclustering {
 public:
  Biclustering(UniversePtr universe, std::vector<Bicluster> biclusters);

  const Universe& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }
  std::size_t size() const { return biclusters_.size(); }
  const Bicluster& bicluster(std::size_t i) const { return biclusters_[i]; }
  const std::vector<Bicluster>& biclusters() const { return biclusters_; }

  bool operator==(const Biclustering& other) const { return biclusters_ == other.biclusters_; }

 private:
  UniversePtr universe_;
  std::vector<Bicluster> biclusters_;
};

/// An (object, feature) pair of the micro-objects transformation.
struct MicroObject {
  ObjectId object;
  FeatureId feature;

  auto operator<=>(const MicroObject&) const = default;
};

/// A clustering whose elements are micro-objects. Produced from a biclustering
/// by micro_transform; positions mirror the source biclustering, and empty
/// clusters are retained.
class MicroClustering {
 public:
  MicroClustering() = default;
  /// Clusters are sorted at construction; duplicate micro-objects within one
  /// cluster throw InvalidInputError.
  explicit MicroClustering(std::vector<std::vector<MicroObject>> clusters);

  std::size_t size() const { return clusters_.size(); }
  const std::vector<MicroObject>& cluster(std::size_t i) const { return clusters_[i]; }
  const std::vector<std::vector<MicroObject>>& clusters() const { return clusters_; }

  bool operator==(const MicroClustering& other) const { return clusters_ == other.clusters_; }

 private:
  std::vector<std::vector<MicroObject>> clusters_;
};

/// Cluster i of the result is the Cartesian product of bicluster i's object
/// and feature parts. Empty products yield empty clusters, kept positionally.
MicroClustering micro_transform(const Biclustering& b);

/// Embeds a traditional clustering as a biclustering by pairing every cluster
/// with the same feature set. Throws InvalidInputError when shared_features
/// is not a subset of F.
Biclustering as_biclustering(const Clustering& c, const std::vector<FeatureId>& shared_features);

/// The tagged id of copy `index` of `id`: "<id>#<index>". The tagging scheme
/// is part of the public contract so that scaled/copied fixtures are
/// reproducible bit-for-bit.
std::string copy_tag(const std::string& id, unsigned index);

/// k-scaled biclustering: every universe id becomes k tagged copies, and each
/// bicluster part is replaced by the tagged copies of its members. Throws
/// DomainError for k = 0; scale(b, 1) is b up to tagging.
Biclustering scale(const Biclustering& b, unsigned k);

/// Disjoint union of k copies: copy j of bicluster i lives on ids tagged with
/// j, and the output lists all of copy 0, then all of copy 1, and so on.
/// Throws DomainError for k = 0.
Biclustering copy(const Biclustering& b, unsigned k);

/// Union of all clusters of a micro-clustering, sorted.
std::vector<MicroObject> clustered_universe(const MicroClustering& m);

}  // namespace biceval
