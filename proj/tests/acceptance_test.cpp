// Acceptance gate: one line per criterion, exit code = number of failures.
#include <iostream>

#include "negabase/selftest.hpp"

int main() {
    return negabase::run_selftest(std::cout);
}
