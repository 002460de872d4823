#include <iostream>

#include "fpc/cli.hpp"

int main(int argc, char** argv) { return fpc::cli::run(argc, argv, std::cout, std::cerr); }
