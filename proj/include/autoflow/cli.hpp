#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autoflow::cli {

/// Dispatches one command line (without the program name). Output goes to
/// `out`, diagnostics to `err`. Exit codes: 0 success, 1 verification
/// failure, 2 usage error, 3 ring/math error.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace autoflow::cli
