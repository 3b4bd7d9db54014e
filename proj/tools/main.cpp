#include <iostream>

#include "indpoly/cli/commands.hpp"

int main(int argc, char** argv) { return indpoly::cli::run(argc, argv, std::cout, std::cerr); }
