#include <iostream>

#include "pdfa/io/cli.hpp"

int main(int argc, char** argv) { return pdfa::io::run_cli(argc, argv, std::cout, std::cerr); }
