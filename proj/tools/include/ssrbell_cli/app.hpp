#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ssrbell::cli {

enum ExitCode : int { kOk = 0, kVerdictFailure = 1, kUsageError = 2, kIoError = 3 };

/// Full command-line entry point; args excludes the program name.
int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssrbell::cli
