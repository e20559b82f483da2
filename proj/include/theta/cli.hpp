#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace theta::cli {

inline constexpr const char* kToolName = "theta-factor";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kValidationError = 1, kSweepFailure = 2 };

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`; errors are written to `err` as a single JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta::cli
