#include <iostream>

#include "tptp_cli/cli.hpp"

int main(int argc, char** argv) { return tptp::cli::run(argc, argv, std::cout, std::cerr); }
