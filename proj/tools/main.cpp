#include <iostream>

#include "polychrome/cli.hpp"

int main(int argc, char** argv) { return polychrome::run(argc, argv, std::cout, std::cerr); }
