#include <iostream>

#include "cuniform/cli.hpp"

int main(int argc, char** argv) {
    return cuniform::run_cli(argc, argv, std::cout, std::cerr);
}
