#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qgraph::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitCompute = 2,
  kExitPropertyFailure = 3,
};

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Reports go to `out`; errors are one JSON line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgraph::cli
