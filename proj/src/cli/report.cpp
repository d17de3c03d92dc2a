#include <openssl/evp.h>

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "cli/support.hpp"

#ifndef GGOR_FIXTURE_DIR
#define GGOR_FIXTURE_DIR "fixtures"
#endif

namespace ggor::cli {

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("GGOR_FIXTURE_DIR")) return env;
  return GGOR_FIXTURE_DIR;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

Json to_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const BettiSequence& seq) { return seq.to_string(); }

Json to_json(const Verdict& v) {
  return Json{{"status", to_string(v.status)}, {"rule", v.rule}, {"witness", v.witness}};
}

int exit_for(Essentiality e) {
  switch (e) {
    case Essentiality::Essential: return Ok;
    case Essentiality::NotEssential: return Negative;
    case Essentiality::Unknown: return Undecided;
  }
  return Failure;
}

namespace {

void render(const Json& j, const std::string& indent, std::ostringstream& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render(v, indent + "  ", out);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      out << indent << it.key() << ":\n";
      for (const auto& e : v) out << indent << "  - " << e.dump() << "\n";
    } else {
      out << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace ggor::cli
