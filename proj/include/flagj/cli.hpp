#pragma once

// Batch commands behind the flagj tool. Each command returns its exit code, a JSON report
// and a plain-text rendering; run_cli wires them to argument parsing and output files.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flagj/io.hpp"

namespace flagj {

namespace exit_code {
inline constexpr int positive = 0;
inline constexpr int negative = 1;
inline constexpr int input_error = 2;
inline constexpr int oracle_mismatch = 3;
inline constexpr int internal_error = 4;
}  // namespace exit_code

struct CliOptions {
  bool oracle = false;
  bool solve = false;
  int max_rank = 4;
};

struct CommandResult {
  int exit_code = exit_code::positive;
  Json report;
  std::string text;
};

CommandResult cmd_check(const RunConfig& cfg, const CliOptions& opts);
CommandResult cmd_construct(const RunConfig& cfg, const CliOptions& opts);
CommandResult cmd_twist(const RunConfig& cfg, const CliOptions& opts);
CommandResult cmd_survey(const RunConfig& cfg, const CliOptions& opts);
CommandResult cmd_rootsys(const RunConfig& cfg, const CliOptions& opts);

/// Seeds used by the survey for Theta: x_i = i + 1, a_i = 1/(i + 2).
SeedMap survey_seeds(const std::vector<std::size_t>& theta);

/// Depth-first enumeration of the complex-sign assignments on the roots outside the closure of
/// theta that keep every triple integrable. The visitor sees each admissible structure.
std::size_t enumerate_sign_patterns(const RootSystem& rs, const std::vector<std::size_t>& theta,
                                    const std::function<void(const Structure&)>& visit = {});

/// argv without the program name. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagj
