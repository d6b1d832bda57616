#include "biceval/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace biceval {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool consume_keyword(std::string_view& s, std::string_view keyword) {
  if (s.substr(0, keyword.size()) != keyword) return false;
  s.remove_prefix(keyword.size());
  return true;
}

// Splits "a,b,c" into trimmed ids; empty input yields an empty list. Ids may
// not contain whitespace, ',' or '|'.
std::vector<std::string> parse_id_list(std::string_view text, int line) {
  std::vector<std::string> ids;
  text = trim(text);
  if (text.empty()) return ids;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view raw =
        comma == std::string_view::npos ? text.substr(start) : text.substr(start, comma - start);
    std::string_view id = trim(raw);
    if (id.empty()) throw ParseError(line, "empty id in list");
    for (char ch : id) {
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '|') {
        throw ParseError(line, "id contains a delimiter character");
      }
    }
    ids.emplace_back(id);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ids;
}

void check_id_list(const std::vector<std::string>& ids, const std::vector<std::string>& declared,
                   int line, const char* what) {
  std::unordered_set<std::string_view> seen;
  std::unordered_set<std::string_view> known(declared.begin(), declared.end());
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw ParseError(line, std::string("duplicate ") + what + " id '" + id + "' within one part");
    }
    if (!known.count(id)) {
      throw ParseError(line, std::string("unknown ") + what + " id '" + id + "'");
    }
  }
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += ids[i];
  }
  return out;
}

}  // namespace

bool ClusteringDocument::is_traditional() const {
  return std::all_of(records.begin(), records.end(),
                     [](const ClusterRecord& r) { return !r.features.has_value(); });
}

UniversePtr ClusteringDocument::universe() const {
  return make_universe(universe_objects, universe_features);
}

Biclustering ClusteringDocument::to_biclustering() const {
  auto u = universe();
  std::vector<Bicluster> bs;
  bs.reserve(records.size());
  for (const auto& r : records) {
    bs.push_back(Bicluster{r.objects, r.features ? *r.features : universe_features});
  }
  return Biclustering(std::move(u), std::move(bs));
}

Clustering ClusteringDocument::to_clustering() const {
  if (!is_traditional()) {
    throw InvalidInputError("the file declares feature parts: not a traditional clustering");
  }
  auto u = universe();
  std::vector<std::vector<ObjectId>> clusters;
  clusters.reserve(records.size());
  for (const auto& r : records) clusters.push_back(r.objects);
  return Clustering(std::move(u), std::move(clusters));
}

ClusteringDocument parse_clustering_document(std::string_view text) {
  ClusteringDocument doc;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int objects_line = 0, features_line = 0;
  int header_seen = 0;  // 0: expect objects, 1: expect features, 2: records
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (header_seen == 0) {
      if (!consume_keyword(line, "objects:")) throw ParseError(line_no, "expected 'objects:' header");
      doc.universe_objects = parse_id_list(line, line_no);
      objects_line = line_no;
      header_seen = 1;
      continue;
    }
    if (header_seen == 1) {
      if (!consume_keyword(line, "features:")) throw ParseError(line_no, "expected 'features:' header");
      doc.universe_features = parse_id_list(line, line_no);
      features_line = line_no;
      header_seen = 2;
      continue;
    }

    if (!consume_keyword(line, "bicluster")) {
      throw ParseError(line_no, "expected a 'bicluster' record");
    }
    std::size_t pipe = line.find('|');
    if (pipe == std::string_view::npos) throw ParseError(line_no, "expected '|' after the record name");
    std::string_view name = trim(line.substr(0, pipe));
    if (name.empty()) throw ParseError(line_no, "missing record name");
    if (name.find_first_of(", \t") != std::string_view::npos) {
      throw ParseError(line_no, "record name contains a delimiter character");
    }
    ClusterRecord record;
    record.name = std::string(name);

    std::string_view rest = line.substr(pipe + 1);
    std::size_t pipe2 = rest.find('|');
    std::string_view objects_clause = trim(pipe2 == std::string_view::npos ? rest : rest.substr(0, pipe2));
    if (!consume_keyword(objects_clause, "objects:")) {
      throw ParseError(line_no, "expected 'objects:' clause");
    }
    record.objects = parse_id_list(objects_clause, line_no);
    check_id_list(record.objects, doc.universe_objects, line_no, "object");

    if (pipe2 != std::string_view::npos) {
      std::string_view features_clause = trim(rest.substr(pipe2 + 1));
      if (!consume_keyword(features_clause, "features:")) {
        throw ParseError(line_no, "expected 'features:' clause");
      }
      if (features_clause.find('|') != std::string_view::npos) {
        throw ParseError(line_no, "unexpected extra clause");
      }
      record.features = parse_id_list(features_clause, line_no);
      check_id_list(*record.features, doc.universe_features, line_no, "feature");
    }
    doc.records.push_back(std::move(record));
  }
  if (header_seen < 2) throw ParseError(line_no, "missing universe header");

  // universe-level duplicates surface with a meaningful message
  std::unordered_set<std::string> seen;
  for (const auto& id : doc.universe_objects) {
    if (!seen.insert(id).second) {
      throw ParseError(objects_line, "duplicate object id '" + id + "' in universe");
    }
  }
  seen.clear();
  for (const auto& id : doc.universe_features) {
    if (!seen.insert(id).second) {
      throw ParseError(features_line, "duplicate feature id '" + id + "' in universe");
    }
  }
  return doc;
}

std::string serialize(const ClusteringDocument& doc) {
  std::string out;
  out += "objects:";
  if (!doc.universe_objects.empty()) out += " " + join_ids(doc.universe_objects);
  out += "\n";
  out += "features:";
  if (!doc.universe_features.empty()) out += " " + join_ids(doc.universe_features);
  out += "\n";
  for (const auto& r : doc.records) {
    out += "bicluster " + r.name + " | objects:";
    if (!r.objects.empty()) out += " " + join_ids(r.objects);
    if (r.features) {
      out += " | features:";
      if (!r.features->empty()) out += " " + join_ids(*r.features);
    }
    out += "\n";
  }
  return out;
}

Biclustering parse_biclustering(std::string_view text) {
  return parse_clustering_document(text).to_biclustering();
}

ClusteringDocument read_clustering_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_clustering_document(buffer.str());
}

}  // namespace biceval
