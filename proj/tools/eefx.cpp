#include <iostream>

#include "eefx/cli.hpp"

int main(int argc, char** argv) { return eefx::run_cli(argc, argv, std::cout, std::cerr); }
