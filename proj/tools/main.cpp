#include <iostream>

#include "semigrav/cli.hpp"

int main(int argc, char** argv) { return semigrav::cli::run(argc, argv, std::cout, std::cerr); }
