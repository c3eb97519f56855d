#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbertk::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kInvalidInput = 2,
  kMissingClassData = 3,
  kMissingAbelianization = 4,
};

inline constexpr const char* kSchemaVersion = "1";

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbertk::cli
