#include <iostream>

#include "qslab/commands.hpp"

int main(int argc, char** argv) { return qslab::run_cli(argc, argv, std::cout, std::cerr); }
