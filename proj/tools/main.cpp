#include "nodal_hodge/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return nodal_hodge::cli::run(argc, argv, std::cout, std::cerr); }
