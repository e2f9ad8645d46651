#include <iostream>

#include "lefsec/cli.hpp"

int main(int argc, char** argv) { return lefsec::cli::run(argc, argv, std::cout, std::cerr); }
