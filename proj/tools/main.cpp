#include <iostream>

#include "cubeknot/cli.hpp"

int main(int argc, char** argv) { return cubeknot::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
