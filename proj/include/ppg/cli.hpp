#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppg::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,  ///< ValidationError, including NoConsistentOrder
  kParse = 2,
  kUsage = 3,  ///< bad arguments, unreadable files, arity mismatch
};

/// Runs one `ppg` invocation. `args` excludes the program name. Data goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ppg::cli
