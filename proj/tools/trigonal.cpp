#include <iostream>

#include "trigonal/cli.hpp"

int main(int argc, char** argv) { return trigonal::run_cli(argc, argv, std::cout, std::cerr); }
