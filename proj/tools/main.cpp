#include <iostream>

#include "eulersym/cli/commands.hpp"

int main(int argc, char** argv) { return eulersym::cli::run(argc, argv, std::cout, std::cerr); }
