#pragma once

#include <ostream>

namespace negabase {

// Runs the acceptance suite, printing one PASS/FAIL line per criterion.
// Returns the number of failed criteria.
int run_selftest(std::ostream& out);

}  // namespace negabase
