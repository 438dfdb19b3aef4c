#include <iostream>

#include "quasidim/cli.hpp"

int main(int argc, char** argv) { return quasidim::cli::main(argc, argv, std::cout, std::cerr); }
