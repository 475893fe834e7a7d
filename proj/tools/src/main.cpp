#include <iostream>

#include "superschur/cli/commands.hpp"

int main(int argc, char** argv) { return superschur::cli::run(argc, argv, std::cout, std::cerr); }
