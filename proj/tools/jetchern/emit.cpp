#include "emit.hpp"

#include <jetchern/version.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jetchern::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string render_json(const TableDoc& doc) {
  Json j;
  j["command"] = doc.command;
  j["params"] = doc.params;
  if (!doc.source.empty()) j["source"] = doc.source;
  j["rows"] = doc.rows_json;
  j["totals"] = doc.totals_json;
  if (!doc.notes.empty()) j["notes"] = doc.notes;
  return j.dump(2) + "\n";
}

std::string render_csv(const TableDoc& doc) {
  std::ostringstream os;
  for (size_t i = 0; i < doc.headers.size(); ++i)
    os << (i ? "," : "") << csv_escape(doc.headers[i]);
  os << "\n";
  for (const auto& row : doc.cells) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
    os << "\n";
  }
  for (const auto& [k, v] : doc.totals_flat)
    os << "totals." << csv_escape(k) << "," << csv_escape(v) << "\n";
  return os.str();
}

std::string render_md(const TableDoc& doc) {
  std::ostringstream os;
  os << "# jetchern " << doc.command << "\n\n";
  os << "params: " << doc.params.dump();
  if (!doc.source.empty()) os << "  source: " << doc.source;
  os << "\n\n";
  os << "|";
  for (const auto& h : doc.headers) os << " " << h << " |";
  os << "\n|";
  for (size_t i = 0; i < doc.headers.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : doc.cells) {
    os << "|";
    for (const auto& c : row) os << " " << c << " |";
    os << "\n";
  }
  if (!doc.totals_flat.empty()) {
    os << "\n";
    for (const auto& [k, v] : doc.totals_flat) os << "- " << k << ": " << v << "\n";
  }
  if (!doc.notes.empty()) {
    os << "\nnotes:\n";
    for (const auto& n : doc.notes) os << "- " << n << "\n";
  }
  return os.str();
}

std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '%' || c == '&' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

std::string render_tex(const TableDoc& doc) {
  std::ostringstream os;
  os << "% jetchern " << doc.command << " " << doc.params.dump();
  if (!doc.source.empty()) os << " source=" << doc.source;
  os << "\n";
  if (doc.tex_body) {
    os << *doc.tex_body;
  } else {
    os << "\\begin{tabular}{|";
    for (size_t i = 0; i < doc.headers.size(); ++i) os << "l|";
    os << "}\n\\hline\n";
    for (size_t i = 0; i < doc.headers.size(); ++i)
      os << (i ? " & " : "") << tex_escape(doc.headers[i]);
    os << " \\\\\n\\hline\n";
    for (const auto& row : doc.cells) {
      for (size_t i = 0; i < row.size(); ++i) os << (i ? " & " : "") << tex_escape(row[i]);
      os << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  }
  for (const auto& [k, v] : doc.totals_flat)
    os << "% totals " << tex_escape(k) << " = " << tex_escape(v) << "\n";
  for (const auto& n : doc.notes) os << "% note: " << tex_escape(n) << "\n";
  return os.str();
}

}  // namespace

std::string render(const TableDoc& doc, const std::string& format) {
  if (format == "json") return render_json(doc);
  if (format == "csv") return render_csv(doc);
  if (format == "md") return render_md(doc);
  if (format == "tex") return render_tex(doc);
  throw std::invalid_argument("unknown format: " + format);
}

std::string cache_key(const TableDoc& doc, const std::string& format) {
  std::string raw = doc.command + "_" + doc.params.dump() + "_" +
                    (doc.source.empty() ? "none" : doc.source) + "_" + format + "_v" +
                    std::to_string(kArtifactVersion);
  std::string key;
  for (char c : raw) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '-';
    key += ok ? c : '_';
  }
  return key;
}

std::optional<std::string> cache_lookup(const std::string& dir, const std::string& key) {
  const std::filesystem::path p = std::filesystem::path(dir) / (key + ".json");
  std::ifstream in(p);
  if (!in) return std::nullopt;
  Json j;
  try {
    in >> j;
  } catch (const Json::exception&) {
    return std::nullopt;  // unreadable entries are treated as misses
  }
  if (!j.contains("key") || j["key"] != key || !j.contains("output")) return std::nullopt;
  return j["output"].get<std::string>();
}

void cache_store(const std::string& dir, const std::string& key, const std::string& output) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path p = std::filesystem::path(dir) / (key + ".json");
  Json j;
  j["key"] = key;
  j["version"] = kArtifactVersion;
  j["output"] = output;
  std::ofstream out(p);
  out << j.dump(2) << "\n";
}

}  // namespace jetchern::cli
