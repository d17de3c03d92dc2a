#pragma once

#include <string>
#include <vector>

#include "ggor/betti.hpp"
#include "ggor/cli.hpp"
#include "ggor/matrices.hpp"

namespace ggor::cli {

Json to_json(const std::vector<Polynomial>& ps);
Json to_json(const PolyMatrix& m);
Json to_json(const BettiSequence& seq);
Json to_json(const Verdict& v);

int exit_for(Essentiality e);

/// Scenario runner for verify-paper-example; fills `result` and returns
/// the exit code.
int run_scenario(const std::string& name, const JobSpec& spec, Json& result, std::string& digest_source);

}  // namespace ggor::cli
