#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afbd::cli {

/// Environment variable overriding the oracle's argument guard.
inline constexpr const char* oracle_guard_env = "AFBD_ORACLE_GUARD";

/// Runs one CLI invocation. `args` excludes the program name; `-` as an
/// input path reads `in`. Returns the process exit status: 0 for success or
/// a positive decision, 1 for a negative decision, 2 for errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace afbd::cli
