#pragma once

#include <ostream>

namespace negabase {

// Command line front end.  Returns the process exit code: 0 on success,
// 1 on domain errors (library Error), 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace negabase
