#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apolar/io.hpp"

namespace apolar::repro {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  /// Table values produced by the engine, compared against the golden file.
  io::json values;
};

struct ReproOptions {
  std::uint64_t seed = 0;
  /// Empty runs every check.
  std::vector<int> only;
};

inline constexpr int kNumChecks = 13;

std::string check_name(int id);
CheckResult run_check(int id, const ReproOptions& opts);
std::vector<CheckResult> run_checks(const ReproOptions& opts);

/// Line-per-difference report of produced values against golden values,
/// keyed by check id ("1".."13"). Empty when everything matches.
std::vector<std::string> golden_diff(const io::json& produced, const io::json& golden);

io::json load_json_file(const std::string& path);

/// Aggregated values of a run, keyed by check id.
io::json collect_values(const std::vector<CheckResult>& results);

}  // namespace apolar::repro
