#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pke::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,
  kUsage = 2,
  kDomain = 3,
};

/// Runs one pke-ma invocation. `args` excludes the program name; polynomial
/// inputs named "-" are read from `in`. The report goes to `out` and
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pke::cli
