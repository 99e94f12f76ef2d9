#include <iostream>

#include "simplext/cli.hpp"

int main(int argc, char** argv) { return simplext::cli::main(argc, argv, std::cout, std::cerr); }
