#pragma once

#include <string>
#include <vector>

namespace hbvm::cli {

// Runs the command-line front end on `args` (program name excluded,
// natural order).  Returns the process exit code:
//   0 success, 2 usage/argument error, 3 stage-solver non-convergence,
//   4 evaluation failure (e.g. N-body collision).
int run(std::vector<std::string> args);

}  // namespace hbvm::cli
