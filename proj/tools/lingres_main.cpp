#include <iostream>

#include "lingres/cli.hpp"

int main(int argc, char** argv) { return lingres::cli::main(argc, argv, std::cout, std::cerr); }
