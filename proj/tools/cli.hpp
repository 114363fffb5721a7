#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tropdesc::cli {

/// Runs the command line; returns the process exit code (0 ok, 1 usage or
/// computation error, 2 validation mismatch). Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropdesc::cli
