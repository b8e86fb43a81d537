#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gpm::cli {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

/// Runs `gpm` with argv-style arguments (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Display name of a pattern key: motif name when known, else hex.
std::string pattern_label(const std::string& key);

}  // namespace gpm::cli
