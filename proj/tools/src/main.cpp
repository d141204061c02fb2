#include <iostream>

#include "slicecalc_cli/commands.hpp"

int main(int argc, char** argv) { return slicecalc::cli::run(argc, argv, std::cout, std::cerr); }
