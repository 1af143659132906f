#include <iostream>

#include "rankagg/cli.hpp"

int main(int argc, char** argv) { return rankagg::run_cli(argc, argv, std::cout, std::cerr); }
