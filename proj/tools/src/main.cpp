#include <iostream>

#include "weylkit_cli/cli.hpp"

int main(int argc, char** argv) { return weylkit::cli::run(argc, argv, std::cout, std::cerr); }
