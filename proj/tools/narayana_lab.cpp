#include <iostream>

#include "narayana_lab/cli.hpp"

int main(int argc, char** argv) { return nlab::cli::run(argc, argv, std::cout, std::cerr); }
