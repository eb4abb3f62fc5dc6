#pragma once

#include <string>
#include <vector>

namespace dast::cli {

/// Runs the command line given argv-style arguments (program name excluded).
/// Returns the process exit code: 0 success, 1 I/O, 2 validation/parse,
/// 3 derivation limit, 4 malformed data.
int run(const std::vector<std::string>& args);

}  // namespace dast::cli
