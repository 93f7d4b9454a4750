#include <iostream>

#include "ssav/cli.hpp"

int main(int argc, char** argv) { return ssav::run_cli(argc, argv, std::cout, std::cerr); }
