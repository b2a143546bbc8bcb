#include <iostream>

#include "cli.h"

int main(int argc, char** argv) { return logicwb::cli::run(argc, argv, std::cout, std::cerr); }
