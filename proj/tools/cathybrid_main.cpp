#include <iostream>

#include "cathybrid/cli.hpp"

int main(int argc, char** argv) { return cathybrid::cli_main(argc, argv, std::cout, std::cerr); }
