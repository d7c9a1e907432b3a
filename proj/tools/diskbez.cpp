#include <iostream>

#include "diskbez/cli.hpp"

int main(int argc, char** argv) { return diskbez::cli::run(argc, argv, std::cout, std::cerr); }
