#include <iostream>

#include "almg/cli.hpp"

int main(int argc, char** argv) { return almg::run_cli(argc, argv, std::cout, std::cerr); }
