#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "ggor/cli.hpp"
#include "ggor/error.hpp"
#include "ggor/groebner.hpp"
#include "ggor/matrices.hpp"

namespace ggor::cli {

/// Unreadable or malformed input; the message carries file and line.
class InputError : public Error {
 public:
  using Error::Error;
};

struct Input {
  std::string raw;
  RingPtr ring;
  std::optional<PolyMatrix> matrix;
  std::optional<IdealBasis> ideal;
  Json expected;  // optional "expected" member of fixtures
};

MonomialOrder parse_order(const std::string& name);

/// {"ring": {"vars": [...]}, "matrix": [[...]]} or {..., "ideal": [...]}.
Input load_input(const std::filesystem::path& path, MonomialOrder order);

}  // namespace ggor::cli
