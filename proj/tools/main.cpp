#include <iostream>

#include "judicious/cli.hpp"

int main(int argc, char** argv) { return judicious::cli::run(argc, argv, std::cout, std::cerr); }
