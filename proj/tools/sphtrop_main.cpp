#include <iostream>

#include "sphtrop/cli.hpp"

int main(int argc, char** argv) { return sphtrop::run_cli(argc, argv, std::cout, std::cerr); }
