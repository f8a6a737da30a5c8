#include "berkdyn/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return berkdyn::run_cli(argc, argv, std::cout, std::cerr); }
