#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tptp::cli {

// Exit codes of every command.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // unexpected status, structure errors, assembly failure
  kUsage = 2,        // bad flags, unreadable or unparsable input
  kGaveUp = 3,
};

// Runs one command line (arguments after the program name). Artifacts go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace tptp::cli
