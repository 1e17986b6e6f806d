#include <iostream>

#include "ahg_cli/cli.hpp"

int main(int argc, char** argv) { return ahg::cli::run(argc, argv, std::cout); }
