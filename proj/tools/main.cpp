#include <iostream>

#include "melon/cli/commands.hpp"

int main(int argc, char** argv) { return melon::cli::run_cli(argc, argv, std::cout, std::cerr); }
