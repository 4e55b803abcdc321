#include <iostream>

#include "pmahler/cli.hpp"

int main(int argc, char** argv) { return pmahler::cli_main(argc, argv, std::cout, std::cerr); }
