#include <iostream>

#include "liftfact/cli.hpp"

int main(int argc, char** argv) { return liftfact::run_cli(argc, argv, std::cout, std::cerr); }
