#pragma once

// The input document format: a JSON facet list with 1-based vertices.
//
//   {
//     "schema": 1,
//     "name": "rp2-6",
//     "vertices": 6,
//     "facets": [[1,2,5], [1,2,6], ...],
//     "golod_assert": [[1,2,3]]        // optional
//   }
//
// Parsing is strict about values always; strict mode additionally rejects
// unknown keys.  Serialization is canonical (sorted facets, fixed key
// order), so reports and round trips are byte-stable.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "zk/errors.hpp"
#include "zk/simplicial_complex.hpp"

namespace zk {

struct ComplexDocument {
  int schema_version = 1;
  std::string name;
  int vertex_count = 0;
  std::vector<std::vector<int>> facets;
  std::vector<std::vector<int>> golod_assert;

  bool operator==(const ComplexDocument&) const = default;
};

namespace document_detail {

inline std::vector<std::vector<int>> parse_subset_list(const nlohmann::ordered_json& node,
                                                       const std::string& key,
                                                       int vertex_count) {
  if (!node.is_array()) throw DocumentError("'" + key + "' must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto& entry = node[i];
    std::string where = key + "[" + std::to_string(i) + "]";
    if (!entry.is_array() || entry.empty()) {
      throw DocumentError(where + ": expected a nonempty array of vertex indices");
    }
    std::vector<int> subset;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) throw DocumentError(where + ": vertex indices must be integers");
      int vertex = v.get<int>();
      if (vertex < 1 || vertex > vertex_count) {
        throw DocumentError(where + ": vertex index " + std::to_string(vertex) +
                            " out of range [1," + std::to_string(vertex_count) + "]");
      }
      subset.push_back(vertex);
    }
    std::sort(subset.begin(), subset.end());
    if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
      throw DocumentError(where + ": repeated vertex index");
    }
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace document_detail

inline ComplexDocument parse_document(const std::string& text, bool strict = false) {
  nlohmann::ordered_json json;
  try {
    json = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("not valid JSON: ") + e.what());
  }
  if (!json.is_object()) throw DocumentError("document root must be an object");

  static const std::vector<std::string> known = {"schema", "name", "vertices", "facets",
                                                 "golod_assert"};
  if (strict) {
    for (const auto& [key, value] : json.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw DocumentError("unknown key '" + key + "' (strict mode)");
      }
    }
  }

  ComplexDocument doc;
  if (!json.contains("schema") || !json["schema"].is_number_integer()) {
    throw DocumentError("missing integer 'schema'");
  }
  doc.schema_version = json["schema"].get<int>();
  if (doc.schema_version != 1) {
    throw DocumentError("unsupported schema version " + std::to_string(doc.schema_version));
  }
  doc.name = json.contains("name") && json["name"].is_string() ? json["name"].get<std::string>()
                                                               : "";
  if (!json.contains("vertices") || !json["vertices"].is_number_integer()) {
    throw DocumentError("missing integer 'vertices'");
  }
  doc.vertex_count = json["vertices"].get<int>();
  if (doc.vertex_count < 1 || doc.vertex_count > 63) {
    throw DocumentError("'vertices' must be in [1,63]");
  }
  if (!json.contains("facets")) throw DocumentError("missing 'facets'");
  doc.facets = document_detail::parse_subset_list(json["facets"], "facets", doc.vertex_count);
  if (doc.facets.empty()) throw DocumentError("'facets' must be nonempty");
  if (json.contains("golod_assert")) {
    doc.golod_assert =
        document_detail::parse_subset_list(json["golod_assert"], "golod_assert", doc.vertex_count);
  }
  return doc;
}

inline ComplexDocument document_from_file(const std::string& path, bool strict = false) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), strict);
}

inline std::string serialize_document(const ComplexDocument& doc) {
  nlohmann::ordered_json json;
  json["schema"] = doc.schema_version;
  json["name"] = doc.name;
  json["vertices"] = doc.vertex_count;
  auto canonical = [](std::vector<std::vector<int>> subsets) {
    for (auto& s : subsets) std::sort(s.begin(), s.end());
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return subsets;
  };
  json["facets"] = canonical(doc.facets);
  if (!doc.golod_assert.empty()) json["golod_assert"] = canonical(doc.golod_assert);
  return json.dump(2) + "\n";
}

inline SimplicialComplex to_complex(const ComplexDocument& doc) {
  std::vector<VertexSubset> facets;
  facets.reserve(doc.facets.size());
  for (const auto& f : doc.facets) {
    VertexSubset s;
    for (int v : f) s.add(v);
    facets.push_back(s);
  }
  try {
    return SimplicialComplex(doc.vertex_count, facets);
  } catch (const std::invalid_argument& e) {
    throw DocumentError(std::string("document does not describe a complex: ") + e.what());
  }
}

inline std::vector<VertexSubset> golod_subsets(const ComplexDocument& doc) {
  std::vector<VertexSubset> out;
  for (const auto& f : doc.golod_assert) {
    VertexSubset s;
    for (int v : f) s.add(v);
    out.push_back(s);
  }
  return out;
}

// FNV-1a over the canonical serialization; stable input fingerprint for
// reports.
inline std::string document_digest(const ComplexDocument& doc) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : serialize_document(doc)) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

}  // namespace zk
