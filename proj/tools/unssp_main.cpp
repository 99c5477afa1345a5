#include <iostream>

#include "unssp/cli.hpp"

int main(int argc, char** argv) { return unssp::run_cli(argc, argv, std::cout, std::cerr); }
