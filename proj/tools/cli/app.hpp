#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infoatom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kDataError = 3,
  kPartial = 4,
};

/// Run the `infoatom` command line. `args` excludes the program name.
/// Documents go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infoatom::cli
