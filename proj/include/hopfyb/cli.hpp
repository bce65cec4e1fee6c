#ifndef HOPFYB_CLI_HPP
#define HOPFYB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hopfyb {

// Runs one CLI invocation. Exit codes: 0 all checks passed, 1 at least one
// check failed (reports still printed), 2 input/parse/schema error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfyb

#endif
