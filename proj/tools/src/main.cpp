#include <iostream>

#include "hocc_cli/cli.hpp"

int main(int argc, char** argv) { return hocc::cli::run(argc, argv, std::cout, std::cerr); }
