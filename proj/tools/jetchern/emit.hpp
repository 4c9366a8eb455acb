#pragma once

#include "json.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jetchern::cli {

using Json = nlohmann::ordered_json;

// Command output in one intermediate shape; every format renders from this,
// so all formats stay byte-deterministic and mutually consistent.
struct TableDoc {
  std::string command;
  Json params = Json::object();
  std::string source;  // "oracle", "paper", or empty (omitted)
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> cells;  // flat rows (md/csv/tex)
  Json rows_json = Json::array();               // authoritative rows for json
  Json totals_json = Json::object();
  std::vector<std::pair<std::string, std::string>> totals_flat;
  std::vector<std::string> notes;
  std::optional<std::string> tex_body;  // custom tabular; generic otherwise
};

// format is one of json|csv|md|tex (validated by the caller).
std::string render(const TableDoc& doc, const std::string& format);

// Cache of rendered outputs, one JSON file per key; the key covers command,
// parameters (including format), source and artifact version, so a hit can be
// replayed verbatim.
std::string cache_key(const TableDoc& doc, const std::string& format);
std::optional<std::string> cache_lookup(const std::string& dir, const std::string& key);
void cache_store(const std::string& dir, const std::string& key, const std::string& output);

}  // namespace jetchern::cli
