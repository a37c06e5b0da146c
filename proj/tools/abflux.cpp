#include <abflux/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return abflux::cli::run(argc, argv, std::cout, std::cerr); }
