#include "partot/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return partot::cli::run(argc, argv, std::cout, std::cerr); }
