#include <iostream>

#include "pbv/cli.hpp"

int main(int argc, char** argv) { return pbv::cli_main(argc, argv, std::cout, std::cerr); }
