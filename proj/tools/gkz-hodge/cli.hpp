#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkz::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verdict_failure = 2 };

// Runs one subcommand; `args` excludes the program name. The JSON report goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a over the raw file bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace gkz::cli
