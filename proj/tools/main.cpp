#include <iostream>

#include "wam/cli.hpp"

int main(int argc, char** argv) { return wam::run_cli(argc, argv, std::cout, std::cerr); }
