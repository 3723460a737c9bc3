#include <iostream>

#include "latang/cli.hpp"

int main(int argc, char** argv) { return latang::cli::run(argc, argv, std::cout, std::cerr); }
