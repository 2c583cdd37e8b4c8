#include <iostream>

#include "truemper/cli.hpp"

int main(int argc, char** argv) { return truemper::run_cli(argc, argv, std::cout, std::cerr, std::cin); }
