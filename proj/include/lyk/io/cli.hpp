#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lyk::io {

// Exit codes of `lyk`.
enum ExitCode : int { kOk = 0, kFails = 1, kUsage = 2, kUndecided = 3 };

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lyk::io
