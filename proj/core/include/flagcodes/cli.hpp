#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagcodes::cli {

/// Dispatches one CLI invocation. Exit codes: 0 success, 2 usage error,
/// 3 verification failure, 4 budget exceeded (best-so-far printed).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcodes::cli
