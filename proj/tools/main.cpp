#include <iostream>

#include "swaprobust/cli.hpp"

int main(int argc, char** argv) { return swaprobust::run_cli(argc, argv, std::cout, std::cerr); }
