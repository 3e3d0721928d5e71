#include <iostream>

#include "fitkit_cli/app.hpp"

int main(int argc, char** argv) { return fitkit::cli::run(argc, argv, std::cout, std::cerr); }
