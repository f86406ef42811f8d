#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsp::cli {

/// Runs one command line (without the program name). Writes results to `out`
/// (or to --output) and diagnostics to `err`.
///
/// Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsp::cli
