#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polylla::cli::main(argc, argv, std::cout, std::cerr); }
