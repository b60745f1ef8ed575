#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepenum::cli {

/// Exit statuses of the sepenum tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,             // bad arguments or unreadable / malformed input
  kInvalidTerminals = 2,  // unknown label, s == t, or s adjacent to t
  kSeparated = 3,         // t unreachable from s
};

/// Runs the tool on `args` (args[0] is the program name). Graph text is read
/// from the named file, or from `in` when the file argument is "-".
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace sepenum::cli
