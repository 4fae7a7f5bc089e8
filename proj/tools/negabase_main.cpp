#include <iostream>

#include "negabase/cli.hpp"

int main(int argc, char** argv) {
    return negabase::run_cli(argc, argv, std::cout, std::cerr);
}
