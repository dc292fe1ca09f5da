#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zoll::cli {

/// Runs the command line (args excludes the program name). Exit codes:
/// 0 success, 1 verification failure, 2 usage, parse or config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zoll::cli
