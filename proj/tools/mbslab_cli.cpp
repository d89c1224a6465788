#include <iostream>

#include "mbslab/cli.hpp"

int main(int argc, char** argv) { return mbslab::cli::main(argc, argv, std::cout, std::cerr); }
