#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace charvar::cli {

/// Environment variable overriding the window memory ceiling (dense entries).
inline constexpr const char* kMemoryCeilingEnv = "CHARVAR_MEMORY_CEILING";

/// Runs one workbench command. `args` excludes the program name.
/// Exit codes: 0 success, 2 hypothesis-failure verdict, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charvar::cli
