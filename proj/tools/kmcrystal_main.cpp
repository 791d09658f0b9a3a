#include <iostream>

#include "kmcrystal/cli.hpp"

int main(int argc, char** argv) { return kmcrystal::cli_main(argc, argv, std::cout, std::cerr); }
