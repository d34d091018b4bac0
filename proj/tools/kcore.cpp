#include <iostream>

#include "kcore/cli.hpp"

int main(int argc, char** argv) { return kcore::cli::run(argc, argv, std::cout, std::cerr); }
