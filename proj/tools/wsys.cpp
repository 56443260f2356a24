#include <iostream>

#include "wsys/cli.hpp"

int main(int argc, char** argv) { return wsys::run_cli(argc, argv, std::cout, std::cerr); }
