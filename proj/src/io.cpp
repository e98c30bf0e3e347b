#include "bdtriad/io.hpp"

#include "bdtriad/errors.hpp"

#include <fstream>
#include <sstream>

namespace bdtriad {

namespace {

constexpr const char* kTriadKeys[] = {"A", "Aprime", "Adprime"};

Index read_dim(const nlohmann::json& j, const std::string& source) {
  if (!j.is_object()) throw ParseError(source + ": top level must be an object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError(source + ": missing integer field 'dim'");
  const auto dim = j["dim"].get<long long>();
  if (dim <= 0) throw ParseError(source + ": 'dim' must be positive");
  return static_cast<Index>(dim);
}

const nlohmann::json& field(const nlohmann::json& j, const char* key, const std::string& source) {
  if (!j.contains(key)) throw ParseError(source + ": missing matrix '" + key + "'");
  return j[key];
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

nlohmann::json matrix_to_json(const RMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMatrix matrix_from_json(const nlohmann::json& j, Index dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of rows");
  if (static_cast<Index>(j.size()) != dim)
    throw ParseError(where + ": has " + std::to_string(j.size()) + " rows, expected " + std::to_string(dim));
  RMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    const std::string at_row = where + " row " + std::to_string(r);
    if (!row.is_array()) throw ParseError(at_row + ": expected an array of entries");
    if (static_cast<Index>(row.size()) != dim)
      throw ParseError(at_row + ": has " + std::to_string(row.size()) + " entries, expected " + std::to_string(dim));
    for (Index c = 0; c < dim; ++c) {
      const auto& entry = row[static_cast<std::size_t>(c)];
      const std::string at = at_row + " column " + std::to_string(c);
      if (!entry.is_string()) throw ParseError(at + ": entries must be strings such as \"-3\" or \"1/2\"");
      try {
        m(r, c) = parse_rational(entry.get<std::string>());
      } catch (const ParseError& e) {
        throw ParseError(at + ": " + e.what());
      }
    }
  }
  return m;
}

nlohmann::json triad_to_json(const TriadDocument& doc) {
  nlohmann::json j;
  j["dim"] = doc.triad.dim();
  for (std::size_t k = 0; k < 3; ++k) j[kTriadKeys[k]] = matrix_to_json(doc.triad[k]);
  if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
  return j;
}

TriadDocument triad_from_json(const nlohmann::json& j, const std::string& source) {
  const Index dim = read_dim(j, source);
  TriadDocument doc;
  doc.triad.a = matrix_from_json(field(j, "A", source), dim, source + ": A");
  doc.triad.a_prime = matrix_from_json(field(j, "Aprime", source), dim, source + ": Aprime");
  doc.triad.a_dprime = matrix_from_json(field(j, "Adprime", source), dim, source + ": Adprime");
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError(source + ": 'metadata' must be an object");
    doc.metadata = j["metadata"];
  }
  return doc;
}

nlohmann::json module_to_json(const TetModule& m) {
  nlohmann::json j;
  j["dim"] = m.dim();
  for (std::size_t k = 0; k < TetModule::kPairs.size(); ++k) {
    const auto [a, b] = TetModule::kPairs[k];
    j[generator_name(a, b)] = matrix_to_json(m.canonical()[k]);
  }
  return j;
}

TetModule module_from_json(const nlohmann::json& j, const std::string& source) {
  const Index dim = read_dim(j, source);
  std::array<RMatrix, 6> gens;
  for (std::size_t k = 0; k < TetModule::kPairs.size(); ++k) {
    const auto [a, b] = TetModule::kPairs[k];
    const std::string name = generator_name(a, b);
    gens[k] = matrix_from_json(field(j, name.c_str(), source), dim, source + ": " + name);
  }
  return TetModule(std::move(gens));
}

nlohmann::json parse_json(std::string_view text, const std::string& source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": invalid JSON at byte " + std::to_string(e.byte));
  }
}

TriadDocument load_triad(const std::filesystem::path& path) {
  return triad_from_json(parse_json(read_file(path), path.string()), path.string());
}

void save_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string() + ": cannot open for writing");
  out << j.dump(2) << '\n';
  if (!out) throw ParseError(path.string() + ": write failed");
}

void save_triad(const std::filesystem::path& path, const TriadDocument& doc) { save_json(path, triad_to_json(doc)); }

TetModule load_module(const std::filesystem::path& path) {
  return module_from_json(parse_json(read_file(path), path.string()), path.string());
}

void save_module(const std::filesystem::path& path, const TetModule& m) { save_json(path, module_to_json(m)); }

}  // namespace bdtriad
