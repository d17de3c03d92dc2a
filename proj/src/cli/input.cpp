#include "cli/input.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ggor::cli {
namespace {

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of a polynomial literal; 0 if not found.
std::size_t line_of_literal(const std::string& text, const std::string& literal) {
  auto pos = text.find("\"" + literal + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

}  // namespace

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::Grevlex;
  if (name == "lex") return MonomialOrder::Lex;
  throw InputError("unknown monomial order '" + name + "' (expected grevlex or lex)");
}

Input load_input(const std::filesystem::path& path, MonomialOrder order) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  Input out;
  out.raw = buf.str();
  const std::string file = path.string();

  Json doc;
  try {
    doc = Json::parse(out.raw);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(file + ":" + std::to_string(line_of_offset(out.raw, e.byte)) + ": invalid JSON: " + e.what());
  }
  auto fail = [&](const std::string& what, std::size_t line = 0) -> InputError {
    return InputError(file + ":" + (line ? std::to_string(line) + ": " : " ") + what);
  };
  if (!doc.is_object() || !doc.contains("ring") || !doc["ring"].contains("vars") || !doc["ring"]["vars"].is_array())
    throw fail("missing ring.vars");
  std::vector<std::string> vars;
  for (const auto& v : doc["ring"]["vars"]) {
    if (!v.is_string()) throw fail("ring.vars must hold strings");
    vars.push_back(v.get<std::string>());
  }
  if (doc["ring"].contains("order")) order = parse_order(doc["ring"]["order"].get<std::string>());
  try {
    out.ring = make_ring(vars, order);
  } catch (const Error& e) {
    throw fail(std::string("bad ring: ") + e.what());
  }

  auto poly = [&](const Json& entry, const std::string& where) {
    if (!entry.is_string()) throw fail(where + " must be a string");
    const auto text = entry.get<std::string>();
    try {
      return parse(text, out.ring);
    } catch (const Error& e) {
      throw fail(where + ": " + e.what(), line_of_literal(out.raw, text));
    }
  };
  const bool has_matrix = doc.contains("matrix"), has_ideal = doc.contains("ideal");
  if (has_matrix == has_ideal) throw fail("exactly one of \"matrix\" and \"ideal\" is required");
  if (has_matrix) {
    const auto& rows = doc["matrix"];
    if (!rows.is_array() || rows.empty()) throw fail("matrix must be a nonempty array of rows");
    std::vector<std::vector<Polynomial>> entries;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array() || rows[i].size() != rows[0].size())
        throw fail("matrix rows must be arrays of equal length");
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        row.push_back(poly(rows[i][j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
      entries.push_back(std::move(row));
    }
    out.matrix = PolyMatrix(out.ring, entries);
  } else {
    const auto& gens = doc["ideal"];
    if (!gens.is_array()) throw fail("ideal must be an array");
    std::vector<Polynomial> ps;
    for (std::size_t i = 0; i < gens.size(); ++i) ps.push_back(poly(gens[i], "ideal[" + std::to_string(i) + "]"));
    out.ideal = IdealBasis(out.ring, ps);
  }
  if (doc.contains("expected")) out.expected = doc["expected"];
  return out;
}

}  // namespace ggor::cli
