#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seedstop::cli {

// Runs one CLI invocation. `args` excludes the program name. Results go
// to `out` (or the --out file), diagnostics to `err`. Returns the process
// exit status: 0 success, 1 data/analysis error (with a JSON error object
// on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace seedstop::cli
