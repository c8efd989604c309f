#include <iostream>

#include "catlab/cli.hpp"

int main(int argc, char** argv) { return catlab::cli::main_entry(argc, argv, std::cout, std::cerr); }
