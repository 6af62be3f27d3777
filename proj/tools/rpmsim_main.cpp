#include <iostream>

#include "rpmsim/cli.hpp"

int main(int argc, char** argv) {
    return rpmsim::run_cli(argc, argv, std::cout, std::cerr);
}
