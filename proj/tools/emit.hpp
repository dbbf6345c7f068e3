#pragma once

// Rendering a report document as JSON, CSV or text. CSV and text flatten the
// document into (path, value) rows in document order.

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace goodprime::cli {

using Json = nlohmann::ordered_json;

inline void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    if (j.empty()) out.emplace_back(path, "{}");
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else {
    out.emplace_back(path, j.dump());
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::string out;
  if (format == "csv") {
    out = "key,value\n";
    for (const auto& [k, v] : rows) out += csv_field(k) + "," + csv_field(v) + "\n";
  } else {
    for (const auto& [k, v] : rows) out += k + " = " + v + "\n";
  }
  return out;
}

}  // namespace goodprime::cli
