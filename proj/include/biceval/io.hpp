#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biceval/core.hpp"

namespace biceval {

/// Syntax error (or id error) with the 1-based line it occurred on.
struct ParseError : InvalidInputError {
  ParseError(int line_number, const std::string& message)
      : InvalidInputError("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
  int line;
};

struct ClusterRecord {
  std::string name;
  std::vector<ObjectId> objects;                     // file order
  std::optional<std::vector<FeatureId>> features;    // nullopt: traditional record

  bool operator==(const ClusterRecord&) const = default;
};

/// The parsed form of a clustering file. Keeps declaration and member order so
/// canonical files round-trip byte-identically through serialize().
///
/// Format (one record per line, '#' starts a comment line):
///   objects: 1,2,3
///   features: a,b
///   bicluster g1 | objects: 1,2 | features: a
///   bicluster g2 | objects: 3
/// Records without a features clause describe a traditional clustering and
/// are embedded with X = F.
struct ClusteringDocument {
  std::vector<ObjectId> universe_objects;
  std::vector<FeatureId> universe_features;
  std::vector<ClusterRecord> records;

  bool operator==(const ClusteringDocument&) const = default;

  bool is_traditional() const;  // every record omits the features clause

  UniversePtr universe() const;
  Biclustering to_biclustering() const;
  /// Requires a traditional document; throws InvalidInputError otherwise.
  Clustering to_clustering() const;
};

ClusteringDocument parse_clustering_document(std::string_view text);
std::string serialize(const ClusteringDocument& doc);

/// parse + embed in one step.
Biclustering parse_biclustering(std::string_view text);

ClusteringDocument read_clustering_file(const std::string& path);

}  // namespace biceval
