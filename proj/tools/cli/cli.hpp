#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nihdl::cli {

enum ExitStatus : int { kSuccess = 0, kDiagnostics = 1, kUsage = 2 };

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics and usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nihdl::cli
