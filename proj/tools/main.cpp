#include <iostream>

#include "quadric/cli.hpp"

int main(int argc, char** argv) { return quadric::run_cli(argc, argv, std::cout, std::cerr); }
