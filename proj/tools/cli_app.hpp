#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inckk::cli {

/// Runs one CLI invocation. args excludes the program name. Returns the
/// process exit code: 0 success/verified, 1 violation found, 2 usage or
/// input error.
int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace inckk::cli
