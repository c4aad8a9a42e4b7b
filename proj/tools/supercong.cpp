#include <iostream>

#include "supercong/cli.hpp"

int main(int argc, char** argv) { return supercong::run_cli(argc, argv, std::cout, std::cerr); }
