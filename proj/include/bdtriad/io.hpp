#pragma once

// JSON matrix documents. Every entry is a string "p" or "p/q"; decimals are
// rejected. Parse errors name the source, the matrix and the entry position.

#include "bdtriad/bd_verify.hpp"
#include "bdtriad/tet.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace bdtriad {

struct TriadDocument {
  Triad triad;
  nlohmann::json metadata = nlohmann::json::object();

  bool operator==(const TriadDocument&) const = default;
};

nlohmann::json matrix_to_json(const RMatrix& m);
/// `where` prefixes error messages, e.g. "triad.json: A".
RMatrix matrix_from_json(const nlohmann::json& j, Index dim, const std::string& where);

nlohmann::json triad_to_json(const TriadDocument& doc);
TriadDocument triad_from_json(const nlohmann::json& j, const std::string& source = "<input>");

/// Six canonical generators X01, X02, X03, X12, X13, X23.
nlohmann::json module_to_json(const TetModule& m);
TetModule module_from_json(const nlohmann::json& j, const std::string& source = "<input>");

/// Parses text as JSON; syntax errors become ParseError with the byte offset.
nlohmann::json parse_json(std::string_view text, const std::string& source = "<input>");

TriadDocument load_triad(const std::filesystem::path& path);
void save_triad(const std::filesystem::path& path, const TriadDocument& doc);
TetModule load_module(const std::filesystem::path& path);
void save_module(const std::filesystem::path& path, const TetModule& m);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace bdtriad
