#pragma once

#include "sympair/symmetric_pair.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sympair {

/// Process exit codes of a verification run.
enum ExitCode : int {
  exit_ok = 0,
  exit_bad_input = 1,
  exit_out_of_hypothesis = 2,
  exit_truncated = 3,
  exit_check_failed = 4,
};

/// Known check names, in report order.
const std::vector<std::string>& check_names();

struct RunConfig {
  /// Preset name or path to a JSON descriptor.
  std::string pair;
  std::vector<std::string> checks = check_names();
  /// -1 scans up to dim p.
  int max_bidegree = -1;
  std::uint64_t ceiling = 200000;
  std::string format = "json";
  std::string output_path;
  /// Include wall-clock times in the JSON report (breaks byte-identity).
  bool timings = false;
  /// Abort at the next stage boundary once this many seconds have passed (0: none).
  double budget_seconds = 0;
  int threads = 1;
};

/// Rejects unknown check names and formats.
void validate(const RunConfig& config);

/// Descriptor from a JSON object:
///   {"name": ..., "algebra": "A2" | [[...]],
///    "involution": "diagonal" | {"generator_images": [{"generator": "e1", "image": {"f(1,0)": -1}}, ...]}}
/// generator_images may also be an object {"e1": {"f(1,0)": "-1"}, ...}.
PairDescriptor parse_descriptor(const nlohmann::json& j);

/// Preset name, or a file holding a descriptor.
PairDescriptor resolve_pair(const std::string& pair);

struct RunResult {
  int exit_code = exit_ok;
  nlohmann::ordered_json report;
  std::vector<std::pair<std::string, double>> stage_seconds;
};

RunResult run_verify(const RunConfig& config);

std::string render_text(const RunResult& result);

/// Preset catalog with dimensions and hypothesis status.
nlohmann::ordered_json list_presets();
std::string render_presets(const nlohmann::ordered_json& catalog);

/// Worker count: hardware concurrency, capped by SYMPAIR_THREADS when set.
int default_threads();

}  // namespace sympair
