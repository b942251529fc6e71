#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fglie::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Parses argv, runs the subcommand and writes the report to --output or
/// `out`.  Diagnostics go to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fglie::cli
