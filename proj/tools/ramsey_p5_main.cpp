#include <iostream>

#include "ramsey_p5/cli.hpp"

int main(int argc, char** argv) { return ramsey_p5::cli::run(argc, argv, std::cout, std::cerr); }
