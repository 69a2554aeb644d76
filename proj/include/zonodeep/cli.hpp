#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zonodeep {

// Runs the command-line surface on argv[1..]. The machine-readable report
// goes to `out`, diagnostics to `err`. Returns the process exit code:
// 0 success, 2 malformed input, 3 violated precondition, 4 resource guard.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zonodeep
