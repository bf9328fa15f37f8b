#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sqwell::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2 };

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqwell::cli
