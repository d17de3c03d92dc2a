#pragma once

// Command dispatch behind the ggor executable. Every command returns a JSON
// report {command, input_digest, result, verdict?, witness?, timings} and an
// exit status: 0 success or positive verdict, 2 decided negative, 3 Unknown,
// 1 input or budget error.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ggor::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { Ok = 0, Failure = 1, Negative = 2, Undecided = 3 };

struct JobSpec {
  std::string command;
  std::optional<std::filesystem::path> input_path;
  /// Positional argument of verify-paper-example.
  std::optional<std::string> scenario;
  /// order, format, budget-seconds, seq, homogeneous, strategy, u, verify, full.
  std::map<std::string, std::string> options;
};

struct JobResult {
  int exit_code = Failure;
  Json report;
};

/// Runs one job. Never throws: errors become exit code 1 with an "error"
/// member in the report.
JobResult run(const JobSpec& spec);

/// Commands accepted by run().
const std::vector<std::string>& commands();
/// Scenario names accepted by verify-paper-example.
const std::vector<std::string>& scenarios();

/// Directory holding the worked-example fixtures: $GGOR_FIXTURE_DIR when set,
/// otherwise the directory configured at build time.
std::filesystem::path fixture_dir();

std::string sha256_hex(const std::string& bytes);

/// Indented key: value rendering of a report.
std::string render_text(const Json& report);

}  // namespace ggor::cli
