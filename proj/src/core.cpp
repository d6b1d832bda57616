#include "biceval/core.hpp"

#include <algorithm>
#include <utility>

namespace biceval {

namespace {

// Sorts in place and throws InvalidInputError on duplicates.
template <typename T>
void sort_unique_or_throw(std::vector<T>& items, const char* what) {
  std::sort(items.begin(), items.end());
  auto dup = std::adjacent_find(items.begin(), items.end());
  if (dup != items.end()) {
    throw InvalidInputError(std::string("duplicate ") + what + " in one part");
  }
}

void check_members(const std::vector<std::string>& ids, bool (Universe::*contains)(const std::string&) const,
                   const Universe& u, const char* what) {
  for (const auto& id : ids) {
    if (!(u.*contains)(id)) {
      throw InvalidInputError(std::string("unknown ") + what + " id '" + id + "'");
    }
  }
}

}  // namespace

Universe::Universe(std::vector<ObjectId> objects, std::vector<FeatureId> features)
    : objects_(std::move(objects)), features_(std::move(features)) {
  object_index_.reserve(objects_.size());
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!object_index_.emplace(objects_[i], i).second) {
      throw InvalidInputError("duplicate object id '" + objects_[i] + "' in universe");
    }
  }
  feature_index_.reserve(features_.size());
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (!feature_index_.emplace(features_[i], i).second) {
      throw InvalidInputError("duplicate feature id '" + features_[i] + "' in universe");
    }
  }
}

bool Universe::same_sets(const Universe& other) const {
  if (objects_.size() != other.objects_.size() || features_.size() != other.features_.size()) {
    return false;
  }
  for (const auto& o : objects_) {
    if (!other.has_object(o)) return false;
  }
  for (const auto& f : features_) {
    if (!other.has_feature(f)) return false;
  }
  return true;
}

UniversePtr make_universe(std::vector<ObjectId> objects, std::vector<FeatureId> features) {
  return std::make_shared<const Universe>(std::move(objects), std::move(features));
}

Clustering::Clustering(UniversePtr universe, std::vector<std::vector<ObjectId>> clusters)
    : universe_(std::move(universe)), clusters_(std::move(clusters)) {
  for (auto& cluster : clusters_) {
    sort_unique_or_throw(cluster, "object");
    check_members(cluster, &Universe::has_object, *universe_, "object");
  }
}

Biclustering::Biclustering(UniversePtr universe, std::vector<Bicluster> biclusters)
    : universe_(std::move(universe)), biclusters_(std::move(biclusters)) {
  for (auto& b : biclusters_) {
    sort_unique_or_throw(b.objects, "object");
    sort_unique_or_throw(b.features, "feature");
    check_members(b.objects, &Universe::has_object, *universe_, "object");
    check_members(b.features, &Universe::has_feature, *universe_, "feature");
  }
}

MicroClustering::MicroClustering(std::vector<std::vector<MicroObject>> clusters)
    : clusters_(std::move(clusters)) {
  for (auto& cluster : clusters_) {
    sort_unique_or_throw(cluster, "micro-object");
  }
}

MicroClustering micro_transform(const Biclustering& b) {
  std::vector<std::vector<MicroObject>> clusters;
  clusters.reserve(b.size());
  for (const auto& bc : b.biclusters()) {
    std::vector<MicroObject> product;
    product.reserve(bc.objects.size() * bc.features.size());
    for (const auto& o : bc.objects) {
      for (const auto& f : bc.features) {
        product.push_back(MicroObject{o, f});
      }
    }
    // Parts are sorted, so the o-major product is already sorted and unique.
    clusters.push_back(std::move(product));
  }
  return MicroClustering(std::move(clusters));
}

Biclustering as_biclustering(const Clustering& c, const std::vector<FeatureId>& shared_features) {
  for (const auto& f : shared_features) {
    if (!c.universe().has_feature(f)) {
      throw InvalidInputError("feature id '" + f + "' is not in the universe");
    }
  }
  std::vector<Bicluster> biclusters;
  biclusters.reserve(c.size());
  for (const auto& cluster : c.clusters()) {
    biclusters.push_back(Bicluster{cluster, shared_features});
  }
  return Biclustering(c.universe_ptr(), std::move(biclusters));
}

std::string copy_tag(const std::string& id, unsigned index) {
  return id + "#" + std::to_string(index);
}

namespace {

std::vector<std::string> tag_all(const std::vector<std::string>& ids, unsigned k) {
  std::vector<std::string> out;
  out.reserve(ids.size() * k);
  for (const auto& id : ids) {
    for (unsigned j = 0; j < k; ++j) out.push_back(copy_tag(id, j));
  }
  return out;
}

std::vector<std::string> tag_one(const std::vector<std::string>& ids, unsigned j) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(copy_tag(id, j));
  return out;
}

}  // namespace

Biclustering scale(const Biclustering& b, unsigned k) {
  if (k == 0) throw DomainError("scale factor k must be >= 1");
  auto universe = make_universe(tag_all(b.universe().objects(), k), tag_all(b.universe().features(), k));
  std::vector<Bicluster> biclusters;
  biclusters.reserve(b.size());
  for (const auto& bc : b.biclusters()) {
    biclusters.push_back(Bicluster{tag_all(bc.objects, k), tag_all(bc.features, k)});
  }
  return Biclustering(std::move(universe), std::move(biclusters));
}

Biclustering copy(const Biclustering& b, unsigned k) {
  if (k == 0) throw DomainError("copy count k must be >= 1");
  auto universe = make_universe(tag_all(b.universe().objects(), k), tag_all(b.universe().features(), k));
  std::vector<Bicluster> biclusters;
  biclusters.reserve(b.size() * k);
  for (unsigned j = 0; j < k; ++j) {
    for (const auto& bc : b.biclusters()) {
      biclusters.push_back(Bicluster{tag_one(bc.objects, j), tag_one(bc.features, j)});
    }
  }
  return Biclustering(std::move(universe), std::move(biclusters));
}

std::vector<MicroObject> clustered_universe(const MicroClustering& m) {
  std::vector<MicroObject> all;
  for (const auto& cluster : m.clusters()) {
    all.insert(all.end(), cluster.begin(), cluster.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace biceval
