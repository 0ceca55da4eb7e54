#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsc {

enum ExitCode : int { kExitOk = 0, kExitVerdictFalse = 1, kExitUsage = 2 };

/// Runs one command line (without the program name). Reports go to `out` unless
/// --out names a file; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsc
