#include <iostream>

#include "pyramidal/cli.hpp"

int main(int argc, char** argv) { return pyr::cli::run(argc, argv, std::cout, std::cerr); }
