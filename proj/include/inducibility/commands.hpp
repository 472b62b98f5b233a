#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace inducibility {

/// Runs the `induce` command line. Results go to `out`, diagnostics to
/// `err`. Returns the process exit status: 0 on success, 1 when a table
/// reproduction has failing rows, 2 on usage or evaluation errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inducibility
