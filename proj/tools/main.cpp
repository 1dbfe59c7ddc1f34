#include <iostream>

#include "arabidx/cli.hpp"

int main(int argc, char** argv) { return arabidx::cli::run(argc, argv, std::cout, std::cerr); }
