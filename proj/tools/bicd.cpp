#include <iostream>

#include "bicd/cli.hpp"

int main(int argc, char** argv) { return bicd::run_command(argc, argv, std::cout, std::cerr); }
