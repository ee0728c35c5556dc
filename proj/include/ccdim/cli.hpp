#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ccdim {

// Entry point behind the ccdim binary. args is the command line without the
// program name. Returns the process exit code: 0 on success, 1 on analysis
// errors (budget, connectivity, failed selftest), 2 on input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ccdim
